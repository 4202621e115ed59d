# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""data.batch UTs."""

from unittest import main

from b3j0f.utils.ut import UTCase

import numpy as np

from ..batch import Batch, BatchSampler, sample_batch
from ..core import LabeledDataset


class BatchTest(UTCase):

    def test_rows(self):

        self.assertRaises(Batch.Error, Batch, np.ones((2, 3)), np.ones((3, 2)))

    def test_nan(self):

        self.assertRaises(
            Batch.Error, Batch, [[np.nan, 1.]], [[1., 0.]]
        )


class SampleBatchTest(UTCase):

    def setUp(self):

        self.ds = LabeledDataset(np.arange(20.).reshape(10, 2), [0, 1] * 5)

    def test_permutation(self):

        batch = sample_batch(self.ds, 10, 3)

        self.assertEqual(sorted(batch.inputs[:, 0]), list(np.arange(0., 20., 2)))
        self.assertTrue(np.array_equal(
            np.argmax(batch.targets, axis=1), batch.labels
        ))

    def test_sizes(self):

        self.assertRaises(ValueError, sample_batch, self.ds, 0, 3)
        self.assertRaises(ValueError, sample_batch, self.ds, 11, 3)


class BatchSamplerTest(UTCase):

    def setUp(self):

        self.ds = LabeledDataset(
            np.arange(14.).reshape(7, 2), [0, 1, 0, 1, 0, 1, 1]
        )

    def _indices(self, sampler, count):

        return [list(sampler.next_indices()) for _ in range(count)]

    def test_epoch_cover(self):

        sampler = BatchSampler(self.ds, 3, rng=1)

        batches = [len(batch) for batch in sampler.epoch()]

        self.assertEqual(batches, [3, 3, 1])

        sampler = BatchSampler(self.ds, 3, rng=1)

        indices = sum(self._indices(sampler, 3), [])

        self.assertEqual(sorted(indices), list(range(7)))

    def test_drop_last(self):

        sampler = BatchSampler(self.ds, 3, rng=1, drop_last=True)

        batches = self._indices(sampler, 4)

        self.assertEqual([len(batch) for batch in batches], [3] * 4)
        self.assertEqual(len(set(batches[0] + batches[1])), 6)
        self.assertEqual(sampler.epoch_count, 2)

    def test_determinism(self):

        first = self._indices(BatchSampler(self.ds, 2, rng=5), 8)
        second = self._indices(BatchSampler(self.ds, 2, rng=5), 8)

        self.assertEqual(first, second)


if __name__ == '__main__':
    main()
