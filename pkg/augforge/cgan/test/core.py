# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""cgan.core UTs."""

from unittest import main, skipUnless

from b3j0f.utils.ut import UTCase

from os import environ

import numpy as np

from ...data.core import class_counts, one_hot_matrix
from ...data.synth import SyntheticSpec, make_synthetic
from ...nn.check import gradient_check, relative_error
from ...nn.core import (
    forward, init_model, model_hash, RELU, TANH, SIGMOID, SOFTMAX, LINEAR
)
from ..config import CGanConfig
from ..core import (
    normalize_batch, inject_noise, train_cgan, generate, discriminator_grads,
    generator_grads, TrainedCGan, FakeDataset, PRETRAIN, FINETUNE
)
from ..loss import discriminator_loss, generator_loss

SLOW = 'AUGFORGE_SLOW'  #: environment variable enabling long runs.


class NormalizeBatchTest(UTCase):

    def test_example(self):

        normalized, means, stds = normalize_batch([[1., 2.], [3., 4.]])

        self.assertEqual(normalized.tolist(), [[-1., -1.], [1., 1.]])
        self.assertEqual(means.tolist(), [2., 3.])
        self.assertEqual(stds.tolist(), [1., 1.])

    def test_constant(self):

        normalized, means, stds = normalize_batch([[5.], [5.], [5.]])

        self.assertEqual(normalized.tolist(), [[0.], [0.], [0.]])
        self.assertEqual(stds.tolist(), [1.])

    def test_moments(self):

        features = np.random.default_rng(0).normal(3., 7., size=(64, 10))

        normalized, _, _ = normalize_batch(features)

        self.assertTrue(np.all(np.abs(normalized.mean(axis=0)) <= 1e-9))
        self.assertTrue(np.all(np.abs(normalized.std(axis=0) - 1.) <= 1e-9))

        again, _, _ = normalize_batch(normalized)

        self.assertTrue(np.allclose(again, normalized, rtol=0., atol=1e-9))

    def test_one_row(self):

        self.assertRaises(ValueError, normalize_batch, [[1., 2.]])


class InjectNoiseTest(UTCase):

    def test_zero(self):

        features = np.arange(6.).reshape(2, 3)

        self.assertTrue(np.array_equal(inject_noise(features, 0., 1), features))

    def test_variance(self):

        noisy = inject_noise(np.zeros((1000, 100)), 0.02, 1)

        self.assertTrue(0.018 <= noisy.var() <= 0.022)

    def test_strength(self):

        rng = np.random.default_rng(2)

        normalized, _, _ = normalize_batch(rng.normal(size=(1000, 100)))

        noise = inject_noise(normalized, 0.02, rng) - normalized

        ratio = noise.var() / normalized.var()

        self.assertTrue(0.018 <= ratio <= 0.022)

    def test_fresh(self):

        rng = np.random.default_rng(3)
        features = np.zeros((4, 4))

        self.assertFalse(np.array_equal(
            inject_noise(features, 0.02, rng), inject_noise(features, 0.02, rng)
        ))

    def test_negative(self):

        self.assertRaises(ValueError, inject_noise, np.zeros(2), -1., 0)


class _Models(object):

    def __init__(self, dim, num_classes, noise_dim, ghidden, dhidden, chidden,
                 seed=0, count=6):

        rng = np.random.default_rng(seed)

        self.generator = init_model(
            [noise_dim + num_classes] + ghidden + [dim], TANH, LINEAR,
            seed=seed
        )
        self.discriminator = init_model(
            [dim + num_classes] + dhidden + [1], RELU, SIGMOID, seed=seed + 1
        )
        self.baseline = init_model(
            [dim] + chidden + [num_classes], RELU, SOFTMAX, seed=seed + 2
        )

        self.onehots = one_hot_matrix(
            rng.integers(num_classes, size=count), num_classes
        )
        self.ginputs = np.hstack([
            rng.normal(size=(count, noise_dim)), self.onehots
        ])
        self.reals = np.hstack([
            rng.normal(size=(count, dim)),
            one_hot_matrix(rng.integers(num_classes, size=count), num_classes)
        ])
        self.means = rng.normal(size=dim)
        self.stds = rng.uniform(0.5, 2., size=dim)


class GradientTest(UTCase):
    """Finite-difference checks of the adversarial gradients."""

    def _assertClose(self, analytic, numeric):

        for grad, ngrad in zip(analytic.params(), numeric):
            self.assertEqual(grad.shape, ngrad.shape)
            self.assertLessEqual(relative_error(grad, ngrad), 1e-4)

    def _checkall(self, models):

        fakes = np.hstack([
            (forward(models.generator, models.ginputs) - models.means) /
            models.stds,
            models.onehots
        ])

        # discriminator loss w.r.t. discriminator parameters

        def dloss(discriminator):
            count = len(models.reals)
            outputs = forward(
                discriminator, np.vstack([models.reals, fakes])
            )
            return discriminator_loss(outputs[:count], outputs[count:], 0.9)

        grads, loss = discriminator_grads(
            models.discriminator, models.reals, fakes, 0.9
        )

        self.assertAlmostEqual(loss, dloss(models.discriminator), 12)
        self._assertClose(grads, gradient_check(dloss, models.discriminator))

        # generator losses w.r.t. generator parameters

        def gloss(lam, index=0):
            def loss(generator):
                outputs = forward(generator, models.ginputs)
                d_fake = forward(models.discriminator, np.hstack([
                    (outputs - models.means) / models.stds, models.onehots
                ]))
                c_probs = forward(models.baseline, outputs)
                return generator_loss(
                    d_fake, c_probs, models.onehots, lam
                )[index]
            return loss

        def ggrads(lam):
            return generator_grads(
                models.generator, models.discriminator, models.baseline,
                models.ginputs, models.onehots, models.means, models.stds, lam
            )[0]

        full, g1only = ggrads(1.5), ggrads(0.)

        # L_G = L_G1 + 1.5 L_G2
        self._assertClose(full, gradient_check(gloss(1.5), models.generator))
        # L_G1 through the discriminator
        self._assertClose(g1only, gradient_check(gloss(0.), models.generator))

        # L_G2 through the baseline classifier
        g2only = type(full)(
            weights=[(a - b) / 1.5 for a, b in zip(full.weights, g1only.weights)],
            biases=[(a - b) / 1.5 for a, b in zip(full.biases, g1only.biases)]
        )
        self._assertClose(
            g2only, gradient_check(gloss(1., index=2), models.generator)
        )

    def test_small(self):

        self._checkall(_Models(4, 2, 3, [6, 5], [6, 4], [5]))

    def test_three_classes(self):

        self._checkall(_Models(5, 3, 2, [7], [5, 3], [4], seed=4))

    def test_default_architectures(self):

        config = CGanConfig()

        self._checkall(_Models(
            100, 2, config.noise_dim, list(config.generator_hidden),
            list(config.discriminator_hidden), [32], count=4
        ))


def _config(**kwargs):

    kwargs.setdefault('noise_dim', 3)
    kwargs.setdefault('generator_hidden', (8, 8))
    kwargs.setdefault('discriminator_hidden', (8, 4))
    kwargs.setdefault('batch_size', 16)
    kwargs.setdefault('pretrain_iters', 20)
    kwargs.setdefault('finetune_iters', 10)
    kwargs.setdefault('seed', 3)

    return CGanConfig(**kwargs)


class TrainCGanTest(UTCase):

    def setUp(self):

        self.pretrain = make_synthetic(
            SyntheticSpec(dim=4, per_class=60, separation=1., seed=1)
        )
        self.finetune = make_synthetic(
            SyntheticSpec(dim=4, per_class=20, separation=1., seed=2)
        )
        self.baseline = init_model([4, 6, 2], RELU, SOFTMAX, seed=5)

    def test_frozen_baseline(self):

        copy = self.baseline.copy()
        digest = model_hash(self.baseline)

        cgan = train_cgan(
            self.pretrain, self.finetune, self.baseline,
            _config(pretrain_iters=150, finetune_iters=50)
        )

        self.assertEqual(len(cgan.telemetry), 200)
        self.assertEqual(self.baseline, copy)
        self.assertEqual(model_hash(self.baseline), digest)
        self.assertEqual(cgan.baseline_ref, digest)

    def test_shapes(self):

        cgan = train_cgan(self.pretrain, self.finetune, self.baseline, _config())

        self.assertIsInstance(cgan, TrainedCGan)
        self.assertEqual(cgan.generator.layer_dims, [5, 8, 8, 4])
        self.assertEqual(cgan.discriminator.layer_dims, [6, 8, 4, 1])
        self.assertEqual(cgan.dim, 4)

    def test_telemetry(self):

        cgan = train_cgan(self.pretrain, self.finetune, self.baseline, _config())

        telemetry = cgan.telemetry

        self.assertEqual(len(telemetry), 30)
        self.assertEqual(
            [record.iteration for record in telemetry], list(range(30))
        )
        self.assertEqual(
            [record.phase for record in telemetry],
            [PRETRAIN] * 20 + [FINETUNE] * 10
        )

        for record in telemetry:
            self.assertTrue(np.all(np.isfinite(
                [record.loss_d, record.loss_g1, record.loss_g2]
            )))
            self.assertTrue(1 <= record.updates <= 3)
            self.assertEqual(record.lam, 2. if record.iteration >= 24 else 0.5)

    def test_determinism(self):

        first = train_cgan(self.pretrain, self.finetune, self.baseline, _config())
        second = train_cgan(
            self.pretrain, self.finetune, self.baseline, _config()
        )

        self.assertEqual(first.generator, second.generator)
        self.assertEqual(first.discriminator, second.discriminator)
        self.assertEqual(first.telemetry, second.telemetry)

        other = train_cgan(
            self.pretrain, self.finetune, self.baseline, _config(seed=4)
        )

        self.assertNotEqual(first.generator, other.generator)

    def test_pretrain_only(self):

        config = _config(finetune_iters=0)

        other = make_synthetic(
            SyntheticSpec(dim=4, per_class=20, separation=3., seed=9)
        )

        first = train_cgan(self.pretrain, self.finetune, self.baseline, config)
        second = train_cgan(self.pretrain, other, self.baseline, config)

        self.assertEqual(first.generator, second.generator)
        self.assertEqual(len(first.telemetry), 20)

    def test_sgd(self):

        cgan = train_cgan(
            self.pretrain, self.finetune, self.baseline,
            _config(optimizer='sgd_momentum', learning_rate=1e-2)
        )

        self.assertEqual(len(cgan.telemetry), 30)

    def test_dim_mismatch(self):

        finetune = make_synthetic(SyntheticSpec(dim=5, per_class=20, seed=2))

        self.assertRaises(
            ValueError, train_cgan, self.pretrain, finetune, self.baseline,
            _config()
        )

    def test_classes_mismatch(self):

        baseline = init_model([4, 6, 3], RELU, SOFTMAX, seed=5)

        self.assertRaises(
            ValueError, train_cgan, self.pretrain, self.finetune, baseline,
            _config()
        )

    @skipUnless(environ.get(SLOW), 'long run')
    def test_convergence(self):

        from ...eval.core import train_classifier

        pretrain = make_synthetic(
            SyntheticSpec(dim=10, per_class=2000, separation=0.5, seed=1)
        )
        finetune = make_synthetic(
            SyntheticSpec(dim=10, per_class=250, separation=0.5, seed=2)
        )
        baseline = train_classifier(finetune, [10, 32, 2], epochs=30, seed=3)

        cgan = train_cgan(
            pretrain, finetune, baseline,
            CGanConfig(pretrain_iters=1000, finetune_iters=500, seed=4)
        )

        losses = [record.loss_d for record in cgan.telemetry]
        tenth = len(losses) // 10

        self.assertLess(np.mean(losses[-tenth:]), np.mean(losses[:tenth]))


class GenerateTest(UTCase):

    def setUp(self):

        config = _config()

        self.cgan = TrainedCGan(
            generator=init_model([5, 8, 4], TANH, LINEAR, seed=0),
            discriminator=init_model([6, 4, 1], RELU, SIGMOID, seed=1),
            baseline_ref='0', config=config, num_classes=2
        )

    def test_counts(self):

        fake = generate(self.cgan, [7, 3], 1)

        self.assertIsInstance(fake, FakeDataset)
        self.assertEqual(class_counts(fake), [7, 3])
        self.assertEqual(fake.dim, 4)

    def test_large(self):

        fake = generate(self.cgan, [5000, 5000], 1)

        self.assertEqual(len(fake), 10000)
        self.assertEqual(class_counts(fake), [5000, 5000])

    def test_single(self):

        fake = generate(self.cgan, [1, 0], 1)

        self.assertEqual(list(fake.labels), [0])

    def test_determinism(self):

        self.assertEqual(
            generate(self.cgan, [4, 4], 6), generate(self.cgan, [4, 4], 6)
        )

    def test_errors(self):

        self.assertRaises(ValueError, generate, self.cgan, [0, 0], 1)
        self.assertRaises(ValueError, generate, self.cgan, [1, 1, 1], 1)
        self.assertRaises(ValueError, generate, self.cgan, [2, -1], 1)

    def test_wrong_parts(self):

        self.assertRaises(
            TrainedCGan.Error, TrainedCGan,
            generator=init_model([4, 8, 4], TANH, LINEAR, seed=0),
            discriminator=init_model([6, 4, 1], RELU, SIGMOID, seed=1),
            baseline_ref='0', config=_config(), num_classes=2
        )


if __name__ == '__main__':
    main()
