# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""Conf driver package with the ConfDriver definition."""

__all__ = ['ConfDriver', 'FileConfDriver', 'KVFileConfDriver']

from .base import ConfDriver
from .file import FileConfDriver, KVFileConfDriver
