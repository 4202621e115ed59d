# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""nn.loss UTs."""

from unittest import main

from b3j0f.utils.ut import UTCase

import numpy as np

from ..loss import (
    EPSILON, binary_cross_entropy, binary_cross_entropy_grad,
    categorical_cross_entropy, categorical_cross_entropy_grad
)


class BinaryCrossEntropyTest(UTCase):

    def test_half(self):

        self.assertAlmostEqual(binary_cross_entropy(0.5, 1.), np.log(2.), 12)

    def test_one(self):

        self.assertLess(binary_cross_entropy(1., 1.), 1e-6)
        self.assertGreaterEqual(binary_cross_entropy(1., 1.), 0.)

    def test_smoothed_minimum(self):

        value = binary_cross_entropy(0.9, 0.9)

        self.assertAlmostEqual(value, 0.325082973391, 9)

        for other in (0.85, 0.89, 0.91, 0.95):
            self.assertGreater(binary_cross_entropy(other, 0.9), value)

        self.assertAlmostEqual(binary_cross_entropy_grad(0.9, 0.9), 0., 12)

    def test_clamp(self):

        self.assertTrue(np.isfinite(binary_cross_entropy(0., 1.)))
        self.assertAlmostEqual(
            binary_cross_entropy(0., 1.), -np.log(EPSILON), 9
        )

    def test_nonnegative(self):

        rng = np.random.default_rng(0)
        predicted = rng.uniform(size=1000)
        target = rng.uniform(size=1000)

        self.assertTrue(np.all(binary_cross_entropy(predicted, target) >= 0.))

    def test_grad(self):

        for predicted, target in ((0.3, 1.), (0.7, 0.), (0.4, 0.9)):
            step = 1e-6
            numeric = (
                binary_cross_entropy(predicted + step, target) -
                binary_cross_entropy(predicted - step, target)
            ) / (2 * step)
            self.assertAlmostEqual(
                binary_cross_entropy_grad(predicted, target), numeric, 6
            )


class CategoricalCrossEntropyTest(UTCase):

    def test_half(self):

        self.assertAlmostEqual(
            categorical_cross_entropy([0.5, 0.5], [1., 0.]), 0.693147, 6
        )

    def test_certain(self):

        value = categorical_cross_entropy([EPSILON, 1. - EPSILON], [0., 1.])

        self.assertAlmostEqual(value, 0., 6)

    def test_quarter(self):

        self.assertAlmostEqual(
            categorical_cross_entropy([0.25, 0.75], [1., 0.]), 1.386294, 6
        )

    def test_rows(self):

        values = categorical_cross_entropy(
            [[0.5, 0.5], [0.25, 0.75]], [[1., 0.], [0., 1.]]
        )

        self.assertEqual(values.shape, (2, ))
        self.assertAlmostEqual(values[1], -np.log(0.75), 12)

    def test_length_mismatch(self):

        self.assertRaises(
            ValueError, categorical_cross_entropy, [0.5, 0.5], [1., 0., 0.]
        )

    def test_not_normalized(self):

        self.assertRaises(
            ValueError, categorical_cross_entropy, [0.5, 0.6], [1., 0.]
        )

    def test_grad(self):

        grad = categorical_cross_entropy_grad([0.25, 0.75], [1., 0.])

        self.assertEqual(list(grad), [-4., -0.])


if __name__ == '__main__':
    main()
