# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""Run configuration package: model and drivers."""

__all__ = [
    'Configuration', 'Category', 'Parameter', 'configuration', 'category',
    'BOOL', 'Array', 'Schedule', 'SCHEDULE', 'PType', 'serialize',
    'ConfDriver', 'FileConfDriver', 'KVFileConfDriver'
]

from .model import (
    Configuration, Category, Parameter, configuration, category, BOOL,
    Array, Schedule, SCHEDULE, PType, serialize
)
from .driver import ConfDriver, FileConfDriver, KVFileConfDriver
