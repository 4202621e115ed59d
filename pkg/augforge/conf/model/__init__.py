# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""Configuration model package: parameters, categories, configurations."""

__all__ = [
    'Configuration', 'configuration', 'Category', 'category', 'Parameter',
    'PType', 'BOOL', 'Array', 'Schedule', 'SCHEDULE', 'serialize'
]

from .conf import Configuration, configuration
from .cat import Category, category
from .param import (
    Parameter, PType, BOOL, Array, Schedule, SCHEDULE, serialize
)
