# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""Measurement battery: accuracies, significance, bagging and sweeps."""

__all__ = [
    'ClassifierConfig', 'EvalReport', 'train_classifier', 'predict_proba',
    'predict', 'evaluate', 'score', 'BagWeights', 'weight_grid',
    'tune_weights', 'tune_bag_weights', 'bag_predict', 'bag_proba',
    'carve_holdout', 'SweepRecord', 'SweepResult', 'size_sweep',
    'balanced_counts', 'ReportRow', 'write_report', 'write_sweep'
]

from .core import (
    ClassifierConfig, EvalReport, train_classifier, predict_proba, predict,
    evaluate, score
)
from .bag import (
    BagWeights, weight_grid, tune_weights, tune_bag_weights, bag_predict,
    bag_proba, carve_holdout
)
from .sweep import SweepRecord, SweepResult, size_sweep, balanced_counts
from .report import ReportRow, write_report, write_sweep
