# -*- coding: utf-8 -*-
#
# augforge documentation build configuration file.

import sys
import os

sys.path.insert(0, os.path.abspath(os.path.join('..', '..')))

from augforge import __version__

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']

source_suffix = ['.rst']

master_doc = 'index'

project = u'augforge'
copyright = u'2026, augforge developers'
author = u'augforge developers'

version = __version__
release = __version__

exclude_patterns = []

pygments_style = 'sphinx'

html_theme = 'default'

html_static_path = ['_static']

htmlhelp_basename = 'augforgedoc'

latex_documents = [
    (master_doc, 'augforge.tex', u'augforge Documentation', author, 'manual'),
]

man_pages = [
    (master_doc, 'augforge', u'augforge Documentation', [author], 1)
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
    'scipy': ('https://docs.scipy.org/doc/scipy', None),
}
