# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""Datasets: files, splits, batches and synthetic mixtures."""

__all__ = [
    'LabeledDataset', 'SplitSpec', 'one_hot', 'one_hot_matrix', 'split',
    'split_indices', 'subset', 'concat', 'class_counts',
    'load_dataset', 'save_dataset', 'DatasetParseError', 'RaggedRowError',
    'NonNumericCellError', 'NegativeLabelError',
    'SyntheticSpec', 'make_synthetic', 'Batch', 'BatchSampler', 'sample_batch'
]

from .core import (
    LabeledDataset, SplitSpec, one_hot, one_hot_matrix, split, split_indices,
    subset, concat, class_counts
)
from .io import (
    load_dataset, save_dataset, DatasetParseError, RaggedRowError,
    NonNumericCellError, NegativeLabelError
)
from .synth import SyntheticSpec, make_synthetic
from .batch import Batch, BatchSampler, sample_batch
