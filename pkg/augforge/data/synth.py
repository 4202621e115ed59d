# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""Gaussian mixture datasets standing in for precomputed text features."""

__all__ = ['SyntheticSpec', 'make_synthetic']

import numpy as np

from ..rand import torng
from .core import LabeledDataset


class SyntheticSpec(object):
    """Per-class gaussian components sharing an isotropic variance.

    Means are either explicit or derived from ``separation``: two classes
    get +/- separation * ones(dim), K > 2 classes get separation times the
    k-th basis vector.
    """

    __slots__ = ('dim', 'per_class', 'num_classes', 'separation', 'means',
                 'cov', 'seed')

    class Error(ValueError):
        """Handle synthetic spec errors."""

    def __init__(
            self, dim=100, per_class=1000, num_classes=2, separation=1.,
            means=None, cov=1., seed=0
    ):
        """
        :param int dim: feature dimension (>= 2).
        :param per_class: samples per class, int or one int per class.
        :param int num_classes: K.
        :param float separation: mean offset when means are not given.
        :param means: optional (K, dim) class means.
        :param float cov: shared per-dimension variance (> 0).
        :param int seed: random seed.
        """

        super(SyntheticSpec, self).__init__()

        if dim < 2:
            raise SyntheticSpec.Error('dim must be >= 2, got {0}.'.format(dim))

        if num_classes < 2:
            raise SyntheticSpec.Error(
                'At least 2 classes expected, got {0}.'.format(num_classes)
            )

        if isinstance(per_class, int):
            per_class = [per_class] * num_classes

        per_class = [int(count) for count in per_class]

        if len(per_class) != num_classes or min(per_class) < 1:
            raise SyntheticSpec.Error(
                'Wrong samples per class {0} for {1} classes.'.format(
                    per_class, num_classes
                )
            )

        if not cov > 0:
            raise SyntheticSpec.Error(
                'Covariance scale must be positive, got {0}.'.format(cov)
            )

        if means is None:

            if num_classes == 2:
                means = [separation * np.ones(dim), -separation * np.ones(dim)]

            elif num_classes <= dim:
                means = separation * np.eye(dim)[:num_classes]

            else:
                raise SyntheticSpec.Error(
                    'Give explicit means for {0} classes in {1} dims.'.format(
                        num_classes, dim
                    )
                )

        means = np.array(means, dtype=np.float64)

        if means.shape != (num_classes, dim):
            raise SyntheticSpec.Error(
                'Means of shape {0} instead of {1}.'.format(
                    means.shape, (num_classes, dim)
                )
            )

        self.dim = dim
        self.per_class = per_class
        self.num_classes = num_classes
        self.separation = separation
        self.means = means
        self.cov = cov
        self.seed = seed


def make_synthetic(spec):
    """Draw a dataset from spec, rows shuffled.

    :param SyntheticSpec spec: mixture description.
    :rtype: LabeledDataset
    """

    rng = torng(spec.seed)

    scale = np.sqrt(spec.cov)

    features, labels = [], []

    for label, (mean, count) in enumerate(zip(spec.means, spec.per_class)):
        features.append(mean + scale * rng.normal(size=(count, spec.dim)))
        labels.append(np.full(count, label))

    features = np.vstack(features)
    labels = np.concatenate(labels)

    order = rng.permutation(len(labels))

    return LabeledDataset(
        features[order], labels[order], num_classes=spec.num_classes
    )
