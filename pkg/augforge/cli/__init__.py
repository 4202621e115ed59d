# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------

"""Command line front end."""

__all__ = ['main', 'parser', 'RunConfig']

from .core import main, parser
from .run import RunConfig
