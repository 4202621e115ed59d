# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------

"""version module."""

__all__ = ['__version__']

# Store the version here so:
# 1) we don't load numpy by importing the package from setup.py
# 2) we can import it into the cli module

#: project version
__version__ = '0.1.0'
