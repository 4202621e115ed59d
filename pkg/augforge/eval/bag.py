# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""Weighted bagging of classifier confidence scores.

Weights live on a simplex grid tuned on a small held-out carve of the
training split.
"""

__all__ = [
    'BagWeights', 'weight_grid', 'tune_weights', 'tune_bag_weights',
    'bag_predict', 'bag_proba', 'carve_holdout', 'HOLDOUT_FRACTION'
]

from itertools import combinations

import numpy as np

from ..data.core import LabeledDataset, SplitSpec, split_indices
from ..nn.core import forward

HOLDOUT_FRACTION = 0.2  #: share of the training split held out for weights.

SIMPLEX_TOLERANCE = 1e-9  #: tolerance on weight sums.


class BagWeights(object):
    """Per-classifier weights on the simplex and their tuning samples."""

    __slots__ = ('weights', 'holdout_indices', 'accuracy')

    class Error(ValueError):
        """Handle weights out of the simplex."""

    def __init__(self, weights, holdout_indices=None, accuracy=None):

        super(BagWeights, self).__init__()

        weights = tuple(float(weight) for weight in weights)

        if not weights or min(weights) < 0. or \
                abs(sum(weights) - 1.) > SIMPLEX_TOLERANCE:
            raise BagWeights.Error(
                'Weights {0} are not on the simplex.'.format(weights)
            )

        self.weights = weights
        self.holdout_indices = holdout_indices
        self.accuracy = accuracy

    def __len__(self):

        return len(self.weights)

    def __repr__(self):

        return 'BagWeights({0}, accuracy={1})'.format(
            self.weights, self.accuracy
        )


def _steps(grid_step):

    steps = int(round(1. / grid_step))

    if steps < 1 or abs(steps * grid_step - 1.) > 1e-9:
        raise ValueError(
            'Grid step {0} must divide 1.'.format(grid_step)
        )

    return steps


def weight_grid(count, grid_step=0.05):
    """Integer compositions of 1 / grid_step into count parts.

    Compositions are sorted by distance to the uniform weights, then
    lexicographically, which is the tie-break order of tune_weights.

    :rtype: list
    """

    steps = _steps(grid_step)

    result = []

    # stars and bars
    for bars in combinations(range(steps + count - 1), count - 1):
        bounds = (-1, ) + bars + (steps + count - 1, )
        result.append(tuple(
            upper - lower - 1 for lower, upper in zip(bounds, bounds[1:])
        ))

    result.sort(key=lambda parts: (sum(part * part for part in parts), parts))

    return result


def tune_weights(probas, labels, grid_step=0.05):
    """Grid search of the weighted sum of probabilities with best accuracy.

    Ties go to the most uniform weights.

    :param list probas: (n, K) probability matrices, one per classifier.
    :param labels: n true labels.
    :param float grid_step: simplex resolution.
    :rtype: BagWeights
    """

    if not len(probas):
        raise ValueError('No classifier to bag.')

    labels = np.asarray(labels)

    if not len(labels):
        raise ValueError('Empty validation set.')

    stacked = np.stack([np.asarray(proba, dtype=np.float64) for proba in probas])

    steps = _steps(grid_step)

    best, bestcorrect = None, -1

    for parts in weight_grid(len(probas), grid_step):

        weights = np.array(parts, dtype=np.float64) / steps
        combined = np.tensordot(weights, stacked, axes=1)
        correct = int(np.sum(np.argmax(combined, axis=1) == labels))

        if correct > bestcorrect:
            best, bestcorrect = parts, correct

    return BagWeights(
        [part / float(steps) for part in best],
        accuracy=bestcorrect / float(len(labels))
    )


def tune_bag_weights(models, validation, grid_step=0.05):
    """Tune bagging weights of models on a validation set.

    :param list models: softmax classifiers.
    :param LabeledDataset validation: held-out samples.
    :rtype: BagWeights
    """

    if not models:
        raise ValueError('No classifier to bag.')

    if not len(validation):
        raise ValueError('Empty validation set.')

    probas = [forward(model, validation.features) for model in models]

    return tune_weights(probas, validation.labels, grid_step)


def bag_proba(models, weights, features):
    """Weighted sum of model probabilities.

    :raises: ValueError if weights and models differ in count or if models
        disagree on the class count.
    """

    weights = getattr(weights, 'weights', weights)

    if len(weights) != len(models) or not models:
        raise ValueError(
            '{0} weights for {1} models.'.format(len(weights), len(models))
        )

    outputs = set(model.output_dim for model in models)

    if len(outputs) != 1:
        raise ValueError('Models disagree on class counts {0}.'.format(outputs))

    result = None

    for model, weight in zip(models, weights):
        proba = weight * forward(model, features)
        result = proba if result is None else result + proba

    return result


def bag_predict(models, weights, features):
    """Argmax of the weighted sum of model probabilities.

    :param list models: softmax classifiers.
    :param weights: BagWeights or plain weights.
    :param features: (n, d) matrix.
    :rtype: numpy.ndarray
    """

    return np.argmax(bag_proba(models, weights, features), axis=1)


def carve_holdout(ds, fraction=HOLDOUT_FRACTION, seed=0):
    """Stratified (rest, holdout) index split of a training set.

    :rtype: tuple
    :raises: LabeledDataset.Error if a side would be empty.
    """

    if not 0. < fraction < 1.:
        raise LabeledDataset.Error(
            'Holdout fraction {0} out of (0, 1).'.format(fraction)
        )

    return split_indices(ds, SplitSpec(1. - fraction, seed, stratified=True))
