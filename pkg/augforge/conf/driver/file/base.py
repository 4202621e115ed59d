# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""File drivers.

Relative configuration paths are looked up in the optional directory given by
the environment variable ``AUGFORGE_CONF_DIR`` and in the working
directory. Absolute paths are used as is.
"""

__all__ = ['FileConfDriver', 'CONF_DIRS']

from os import environ
from os.path import exists, expanduser, isabs, join, abspath

from ..base import ConfDriver

AUGFORGE_CONF_DIR = 'AUGFORGE_CONF_DIR'  #: conf dir environment variable.

CONF_DIRS = []  #: configuration directories.

if AUGFORGE_CONF_DIR in environ:
    CONF_DIRS.append(environ[AUGFORGE_CONF_DIR])


class FileConfDriver(ConfDriver):
    """Conf driver dedicated to files."""

    def rscpaths(self, path):

        path = expanduser(path)

        if isabs(path):
            return [path] if exists(path) else []

        result = list(
            join(conf_dir, path) for conf_dir in CONF_DIRS
            if exists(join(conf_dir, path))
        )

        local_path = abspath(path)
        if exists(local_path) and local_path not in result:
            result.append(local_path)

        return result
