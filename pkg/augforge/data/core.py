# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""Labeled feature datasets, label encoding and splits."""

__all__ = [
    'LabeledDataset', 'SplitSpec', 'one_hot', 'one_hot_matrix', 'split',
    'split_indices', 'subset', 'concat', 'class_counts'
]

import numpy as np

from ..rand import torng


class LabeledDataset(object):
    """Immutable (n, d) feature matrix with integer labels in [0, K).

    Arrays are stored read-only.
    """

    __slots__ = ('features', 'labels', 'num_classes')

    class Error(ValueError):
        """Handle dataset consistency errors."""

    def __init__(self, features, labels, num_classes=None):
        """
        :param features: (n, d) real matrix.
        :param labels: n class ids.
        :param int num_classes: K. Default is max label + 1 (at least 2).
        :raises: LabeledDataset.Error.
        """

        super(LabeledDataset, self).__init__()

        features = np.array(features, dtype=np.float64)
        labels = np.array(labels)

        if features.ndim != 2:
            raise LabeledDataset.Error(
                'Feature matrix expected, got shape {0}.'.format(features.shape)
            )

        if labels.ndim != 1 or len(labels) != len(features):
            raise LabeledDataset.Error(
                '{0} labels for {1} samples.'.format(labels.size, len(features))
            )

        if labels.size and not np.all(np.equal(np.mod(labels, 1), 0)):
            raise LabeledDataset.Error('Labels must be integers.')

        labels = labels.astype(np.int64)

        if not np.all(np.isfinite(features)):
            raise LabeledDataset.Error('Non-finite features.')

        if labels.size and labels.min() < 0:
            raise LabeledDataset.Error('Negative labels.')

        if num_classes is None:
            num_classes = max(int(labels.max()) + 1 if labels.size else 0, 2)

        if num_classes < 2:
            raise LabeledDataset.Error(
                'At least 2 classes expected, got {0}.'.format(num_classes)
            )

        if labels.size and labels.max() >= num_classes:
            raise LabeledDataset.Error(
                'Label {0} out of {1} classes.'.format(labels.max(), num_classes)
            )

        features.setflags(write=False)
        labels.setflags(write=False)

        self.features = features
        self.labels = labels
        self.num_classes = int(num_classes)

    def __len__(self):

        return len(self.labels)

    @property
    def dim(self):
        """Feature dimension d."""

        return self.features.shape[1]

    def __eq__(self, other):

        return isinstance(other, LabeledDataset) and \
            self.num_classes == other.num_classes and \
            np.array_equal(self.labels, other.labels) and \
            self.features.shape == other.features.shape and \
            np.array_equal(self.features, other.features)

    def __ne__(self, other):

        return not self.__eq__(other)

    __hash__ = None

    def __repr__(self):

        return 'LabeledDataset(n={0}, d={1}, K={2})'.format(
            len(self), self.dim, self.num_classes
        )


class SplitSpec(object):
    """Train/test split description."""

    __slots__ = ('train_fraction', 'seed', 'stratified')

    def __init__(self, train_fraction=0.5, seed=0, stratified=True):

        super(SplitSpec, self).__init__()

        if not 0. < train_fraction < 1.:
            raise LabeledDataset.Error(
                'Train fraction must lie in (0, 1), got {0}.'.format(
                    train_fraction
                )
            )

        self.train_fraction = train_fraction
        self.seed = seed
        self.stratified = stratified


def one_hot(label, num_classes):
    """Get the one-hot vector of label among num_classes.

    :rtype: numpy.ndarray
    :raises: ValueError if label is not in [0, num_classes).
    """

    if not 0 <= label < num_classes:
        raise ValueError(
            'Label {0} out of {1} classes.'.format(label, num_classes)
        )

    result = np.zeros(num_classes)
    result[label] = 1.

    return result


def one_hot_matrix(labels, num_classes):
    """One-hot rows of input labels.

    :rtype: numpy.ndarray
    """

    labels = np.asarray(labels, dtype=np.int64)

    if labels.size and (labels.min() < 0 or labels.max() >= num_classes):
        raise ValueError(
            'Labels out of {0} classes: {1}.'.format(num_classes, labels)
        )

    return np.eye(num_classes)[labels]


def _count(fraction, size):

    return int(np.floor(fraction * size + 0.5))


def split_indices(ds, spec):
    """Get sorted (train, test) index arrays of a split.

    With stratification, each class c contributes round(fraction * n_c)
    samples to the train side.

    :raises: LabeledDataset.Error if a side is empty.
    """

    rng = torng(spec.seed)

    if spec.stratified:

        train = []

        for label in range(ds.num_classes):
            indices = np.flatnonzero(ds.labels == label)
            indices = rng.permutation(indices)
            train.append(indices[:_count(spec.train_fraction, len(indices))])

        train = np.concatenate(train) if train else np.array([], dtype=int)

    else:
        indices = rng.permutation(len(ds))
        train = indices[:_count(spec.train_fraction, len(ds))]

    train = np.sort(train)

    mask = np.ones(len(ds), dtype=bool)
    mask[train] = False
    test = np.flatnonzero(mask)

    if not len(train) or not len(test):
        raise LabeledDataset.Error(
            'Train fraction {0} leaves an empty side on {1} samples.'.format(
                spec.train_fraction, len(ds)
            )
        )

    return train, test


def split(ds, spec):
    """Split ds into (train, test) datasets.

    :param LabeledDataset ds: dataset to split.
    :param SplitSpec spec: split description.
    :rtype: tuple
    """

    train, test = split_indices(ds, spec)

    return subset(ds, train), subset(ds, test)


def subset(ds, indices):
    """Rows of ds at indices, in indices order, with the same K."""

    indices = np.asarray(indices, dtype=np.int64)

    return LabeledDataset(
        ds.features[indices], ds.labels[indices], num_classes=ds.num_classes
    )


def concat(first, second):
    """Rows of first followed by rows of second.

    :raises: LabeledDataset.Error on different dims or class counts.
    """

    if first.dim != second.dim or first.num_classes != second.num_classes:
        raise LabeledDataset.Error(
            'Can not concatenate {0} and {1}.'.format(first, second)
        )

    return LabeledDataset(
        np.vstack([first.features, second.features]),
        np.concatenate([first.labels, second.labels]),
        num_classes=first.num_classes
    )


def class_counts(ds):
    """Number of samples per class.

    :rtype: list
    """

    return [
        int(count)
        for count in np.bincount(ds.labels, minlength=ds.num_classes)
    ]
