# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""Mini-batches."""

__all__ = ['Batch', 'BatchSampler', 'sample_batch']

import numpy as np

from ..rand import torng
from .core import one_hot_matrix


class Batch(object):
    """Inputs with one-hot targets (and the raw labels)."""

    __slots__ = ('inputs', 'targets', 'labels')

    class Error(ValueError):
        """Handle inconsistent batches."""

    def __init__(self, inputs, targets, labels=None):

        super(Batch, self).__init__()

        inputs = np.asarray(inputs, dtype=np.float64)
        targets = np.asarray(targets, dtype=np.float64)

        if len(inputs) != len(targets):
            raise Batch.Error(
                '{0} inputs for {1} targets.'.format(len(inputs), len(targets))
            )

        if np.any(np.isnan(inputs)) or np.any(np.isnan(targets)):
            raise Batch.Error('NaN in batch.')

        self.inputs = inputs
        self.targets = targets
        self.labels = labels

    def __len__(self):

        return len(self.inputs)


def _batch(ds, indices):

    labels = ds.labels[indices]

    return Batch(
        inputs=ds.features[indices],
        targets=one_hot_matrix(labels, ds.num_classes),
        labels=labels
    )


def _checksize(ds, batch_size):

    if batch_size < 1:
        raise ValueError('Batch size must be positive, got {0}.'.format(
            batch_size
        ))

    if batch_size > len(ds):
        raise ValueError('Batch size {0} exceeds {1} samples.'.format(
            batch_size, len(ds)
        ))


def sample_batch(ds, batch_size, rng):
    """Draw batch_size distinct samples of ds.

    :param LabeledDataset ds: dataset.
    :param int batch_size: number of samples in [1, len(ds)].
    :param rng: seed or numpy Generator.
    :rtype: Batch
    """

    _checksize(ds, batch_size)

    indices = torng(rng).permutation(len(ds))[:batch_size]

    return _batch(ds, indices)


class BatchSampler(object):
    """Epoch-wise sampling without replacement.

    Each epoch draws a fresh permutation of the dataset from the sampler's own
    generator and cuts it in consecutive batches. The last partial batch of an
    epoch is returned unless drop_last is set.
    """

    def __init__(self, ds, batch_size, rng=None, drop_last=False):

        super(BatchSampler, self).__init__()

        _checksize(ds, batch_size)

        self.ds = ds
        self.batch_size = batch_size
        self.rng = torng(rng)
        self.drop_last = drop_last
        self.epoch_count = 0

        self._order = None
        self._cursor = 0

    def next_indices(self):
        """Indices of the next batch, starting a new epoch if needed."""

        remaining = 0 if self._order is None else len(self._order) - self._cursor

        if not remaining or (self.drop_last and remaining < self.batch_size):
            self._order = self.rng.permutation(len(self.ds))
            self._cursor = 0
            self.epoch_count += 1

        result = self._order[self._cursor: self._cursor + self.batch_size]
        self._cursor += len(result)

        return result

    def next_batch(self):
        """Get the next Batch."""

        return _batch(self.ds, self.next_indices())

    def epoch(self):
        """Iterate over the batches of one whole new epoch."""

        self._order = None

        while True:
            yield self.next_batch()

            remaining = len(self._order) - self._cursor

            if not remaining or (self.drop_last and remaining < self.batch_size):
                break
