# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""Cross-entropy losses and their derivatives.

Probabilities are clamped into [EPSILON, 1 - EPSILON] before any log.
Functions are elementwise (binary) or row-wise (categorical) on arrays and
accept plain floats as well.
"""

__all__ = [
    'EPSILON', 'binary_cross_entropy', 'binary_cross_entropy_grad',
    'categorical_cross_entropy', 'categorical_cross_entropy_grad'
]

import numpy as np

EPSILON = 1e-7  #: probability clamp.

SUM_TOLERANCE = 1e-6  #: tolerance on probability vector sums.


def _clamp(predicted):

    return np.clip(np.asarray(predicted, dtype=np.float64), EPSILON, 1. - EPSILON)


def binary_cross_entropy(predicted, target):
    """-target*log(p) - (1-target)*log(1-p) with p clamped.

    :param predicted: probabilities in (0, 1).
    :param target: targets in [0, 1].
    :return: same shape as the broadcast of inputs (float for scalars).
    """

    predicted = _clamp(predicted)
    target = np.asarray(target, dtype=np.float64)

    result = -target * np.log(predicted) - (1. - target) * np.log1p(-predicted)

    return result if result.ndim else float(result)


def binary_cross_entropy_grad(predicted, target):
    """Derivative of binary_cross_entropy w.r.t. predicted."""

    predicted = _clamp(predicted)
    target = np.asarray(target, dtype=np.float64)

    result = -target / predicted + (1. - target) / (1. - predicted)

    return result if result.ndim else float(result)


def _checkdists(predicted_dist, target_onehot):

    predicted_dist = np.asarray(predicted_dist, dtype=np.float64)
    target_onehot = np.asarray(target_onehot, dtype=np.float64)

    if predicted_dist.shape != target_onehot.shape:
        raise ValueError(
            'Length mismatch between predictions {0} and targets {1}.'.format(
                predicted_dist.shape, target_onehot.shape
            )
        )

    sums = predicted_dist.sum(axis=-1)

    if np.any(np.abs(sums - 1.) > SUM_TOLERANCE):
        raise ValueError(
            'Predicted distributions must sum to 1, got {0}.'.format(sums)
        )

    return predicted_dist, target_onehot


def categorical_cross_entropy(predicted_dist, target_onehot):
    """-sum(target * log(predicted)) along the last axis.

    :param predicted_dist: probability vector(s).
    :param target_onehot: one-hot vector(s) of the same shape.
    :return: one value per row (float for a single vector).
    :raises: ValueError on length mismatch or non-normalized predictions.
    """

    predicted_dist, target_onehot = _checkdists(predicted_dist, target_onehot)

    logs = np.log(np.maximum(predicted_dist, EPSILON))

    result = -np.sum(target_onehot * logs, axis=-1)

    return result if result.ndim else float(result)


def categorical_cross_entropy_grad(predicted_dist, target_onehot):
    """Derivative of categorical_cross_entropy w.r.t. predicted_dist."""

    predicted_dist, target_onehot = _checkdists(predicted_dist, target_onehot)

    return -target_onehot / np.maximum(predicted_dist, EPSILON)
