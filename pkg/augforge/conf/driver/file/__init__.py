# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
__all__ = ['FileConfDriver', 'KVFileConfDriver']

from .base import FileConfDriver
from .kv import KVFileConfDriver
