# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""Conditional GAN training and sampling.

Each iteration runs one discriminator step on half real, half fake samples,
then u generator steps with u drawn uniformly in gen_updates. The generator is
pushed by two signals: the discriminator through L_G1 and the frozen baseline
classifier through L_G2.

Real batches are normalized per feature. The same affine map is applied to
the fake features before the discriminator, so the generator produces raw
features that the baseline classifier consumes directly. Gaussian noise is
added to normalized real features during fine-tuning only.
"""

__all__ = [
    'normalize_batch', 'inject_noise', 'train_cgan', 'generate',
    'discriminator_grads', 'generator_grads',
    'TrainedCGan', 'FakeDataset', 'TelemetryRecord', 'PRETRAIN', 'FINETUNE'
]

from collections import namedtuple

import numpy as np

from ..data.batch import BatchSampler
from ..data.core import LabeledDataset, one_hot_matrix
from ..nn.core import (
    NumericalError, backward, forward, init_model, model_hash,
    RELU, TANH, SIGMOID, LINEAR, SOFTMAX
)
from ..nn.optim import ADAM, new_optimizer, optimizer_step
from ..rand import substream, torng
from .config import CGanConfig
from .loss import (
    discriminator_loss, discriminator_loss_grad, generator_loss,
    generator_loss_grad, lambda_at
)

PRETRAIN = 'pretrain'
FINETUNE = 'finetune'

STD_FLOOR = 1e-12  #: columns with a smaller std are centered only.

#: one training iteration. loss_g1/loss_g2 average the generator steps.
TelemetryRecord = namedtuple(
    'TelemetryRecord',
    ['iteration', 'phase', 'loss_d', 'loss_g1', 'loss_g2', 'lam', 'updates']
)


def normalize_batch(features):
    """Zero mean, unit population std per column.

    :param features: (batch, d) matrix with batch >= 2.
    :return: (normalized, means, stds). Degenerate columns report std 1.
    :raises: ValueError on batches of less than 2 rows.
    """

    features = np.asarray(features, dtype=np.float64)

    if features.ndim != 2 or len(features) < 2:
        raise ValueError(
            'At least 2 rows needed to normalize, got shape {0}.'.format(
                features.shape
            )
        )

    means = features.mean(axis=0)
    stds = features.std(axis=0)
    stds[stds < STD_FLOOR] = 1.

    return (features - means) / stds, means, stds


def inject_noise(features, variance, rng):
    """Add i.i.d. N(0, variance) noise to every entry.

    :raises: ValueError on negative variance.
    """

    if variance < 0:
        raise ValueError('Negative noise variance {0}.'.format(variance))

    features = np.asarray(features, dtype=np.float64)

    if variance == 0:
        return features.copy()

    return features + torng(rng).normal(
        0., np.sqrt(variance), size=features.shape
    )


class FakeDataset(LabeledDataset):
    """Generator outputs labeled by their conditioning classes."""

    __slots__ = ()


class TrainedCGan(object):
    """Generator, discriminator, frozen baseline reference and telemetry."""

    __slots__ = (
        'generator', 'discriminator', 'baseline_ref', 'telemetry', 'config',
        'num_classes'
    )

    class Error(ValueError):
        """Handle inconsistent cGAN parts."""

    def __init__(
            self, generator, discriminator, baseline_ref, config,
            num_classes, telemetry=None
    ):
        """
        :param MlpModel generator: noise_dim + K -> d, linear output.
        :param MlpModel discriminator: d + K -> 1, sigmoid output.
        :param str baseline_ref: model_hash of the frozen baseline.
        :param CGanConfig config: training configuration.
        :param int num_classes: K.
        :param list telemetry: TelemetryRecord per iteration.
        """

        super(TrainedCGan, self).__init__()

        dim = generator.output_dim

        if generator.input_dim != config.noise_dim + num_classes or \
                generator.output_activation != LINEAR:
            raise TrainedCGan.Error(
                'Wrong generator {0} for noise dim {1} and {2} classes.'.format(
                    generator, config.noise_dim, num_classes
                )
            )

        if discriminator.input_dim != dim + num_classes or \
                discriminator.output_dim != 1 or \
                discriminator.output_activation != SIGMOID:
            raise TrainedCGan.Error(
                'Wrong discriminator {0} for dim {1} and {2} classes.'.format(
                    discriminator, dim, num_classes
                )
            )

        self.generator = generator
        self.discriminator = discriminator
        self.baseline_ref = baseline_ref
        self.config = config
        self.num_classes = num_classes
        self.telemetry = [] if telemetry is None else telemetry

    @property
    def dim(self):
        """Feature dimension."""

        return self.generator.output_dim


def _check(pretrain, finetune, baseline):

    dim, num_classes = baseline.input_dim, baseline.output_dim

    if baseline.output_activation != SOFTMAX:
        raise ValueError('Baseline classifier must have a softmax output.')

    for name, ds in ((PRETRAIN, pretrain), (FINETUNE, finetune)):

        if ds.dim != dim:
            raise ValueError(
                '{0} dim {1} differs from baseline input dim {2}.'.format(
                    name, ds.dim, dim
                )
            )

        if ds.num_classes != num_classes:
            raise ValueError(
                '{0} has {1} classes, baseline outputs {2}.'.format(
                    name, ds.num_classes, num_classes
                )
            )

    return dim, num_classes


def discriminator_grads(discriminator, real_inputs, fake_inputs,
                        smoothing_target=0.9):
    """Discriminator loss and parameter gradients on real and fake pairs.

    :param MlpModel discriminator: d + K -> 1 sigmoid model.
    :param real_inputs: normalized real features with one-hot labels.
    :param fake_inputs: normalized fake features with one-hot labels.
    :param float smoothing_target: target of real samples.
    :return: (Gradients, L_D).
    """

    count = len(real_inputs)

    dinputs = np.vstack([real_inputs, fake_inputs])
    outputs = forward(discriminator, dinputs)

    d_real, d_fake = outputs[:count], outputs[count:]

    loss = discriminator_loss(d_real, d_fake, smoothing_target)
    grad_real, grad_fake = discriminator_loss_grad(
        d_real, d_fake, smoothing_target
    )

    grads = backward(discriminator, dinputs, np.vstack([grad_real, grad_fake]))

    return grads, loss


def generator_grads(generator, discriminator, baseline, ginputs, onehots,
                    means, stds, lam):
    """Generator losses and parameter gradients.

    L_G1 reaches the generator through the discriminator (after the real
    batch normalization map), L_G2 through the frozen baseline classifier.

    :param ginputs: noise and one-hot rows fed to the generator.
    :param onehots: conditioning labels of ginputs.
    :param means: real batch feature means.
    :param stds: real batch feature stds.
    :param float lam: weight of L_G2.
    :return: (Gradients, L_G1, L_G2).
    """

    dim = generator.output_dim

    fakes = forward(generator, ginputs)

    dinputs = np.hstack([(fakes - means) / stds, onehots])
    d_fake = forward(discriminator, dinputs)
    c_probs = forward(baseline, fakes)

    _, loss_g1, loss_g2 = generator_loss(d_fake, c_probs, onehots, lam)
    grad_d, grad_c = generator_loss_grad(d_fake, c_probs, onehots, lam)

    grad_fakes = backward(
        discriminator, dinputs, grad_d, input_grad=True
    ).inputs[:, :dim] / stds

    if lam:
        grad_fakes = grad_fakes + backward(
            baseline, fakes, grad_c, input_grad=True
        ).inputs

    return backward(generator, ginputs, grad_fakes), loss_g1, loss_g2


class _Trainer(object):
    """One cGAN training run state."""

    def __init__(self, baseline, config, dim, num_classes, logger=None):

        self.baseline = baseline
        self.config = config
        self.dim = dim
        self.num_classes = num_classes
        self.logger = logger

        seed = config.seed

        self.generator = init_model(
            config.generator_dims(dim, num_classes), TANH, LINEAR,
            seed=substream(seed, 'cgan', 'generator')
        )
        self.discriminator = init_model(
            config.discriminator_dims(dim, num_classes), RELU, SIGMOID,
            seed=substream(seed, 'cgan', 'discriminator')
        )

        kwargs = dict(learning_rate=config.learning_rate)
        if config.optimizer != ADAM:
            kwargs['momentum'] = config.momentum

        self.goptim = new_optimizer(self.generator, config.optimizer, **kwargs)
        self.doptim = new_optimizer(
            self.discriminator, config.optimizer, **kwargs
        )

        self.batchrng = substream(seed, 'cgan', 'batches')
        self.noiserng = substream(seed, 'cgan', 'noise')
        self.latentrng = substream(seed, 'cgan', 'latent')
        self.updaterng = substream(seed, 'cgan', 'updates')

        self.telemetry = []

    def latent(self, count):
        """Noise plus one-hot conditioning inputs of the generator."""

        labels = self.latentrng.integers(self.num_classes, size=count)
        onehots = one_hot_matrix(labels, self.num_classes)
        noise = self.latentrng.normal(size=(count, self.config.noise_dim))

        return np.hstack([noise, onehots]), onehots

    def dstep(self, reals, onehots, means, stds):

        ginputs, fonehots = self.latent(len(reals))
        fakes = (forward(self.generator, ginputs) - means) / stds

        grads, loss = discriminator_grads(
            self.discriminator, np.hstack([reals, onehots]),
            np.hstack([fakes, fonehots]), self.config.smoothing_target
        )

        self.discriminator, self.doptim = optimizer_step(
            self.discriminator, grads, self.doptim
        )

        return loss

    def gstep(self, count, means, stds, lam):

        ginputs, onehots = self.latent(count)

        grads, loss_g1, loss_g2 = generator_grads(
            self.generator, self.discriminator, self.baseline, ginputs,
            onehots, means, stds, lam
        )

        self.generator, self.goptim = optimizer_step(
            self.generator, grads, self.goptim
        )

        return loss_g1, loss_g2

    def iterate(self, iteration, phase, sampler):

        config = self.config

        fraction = iteration / float(max(config.total_iters, 1))
        lam = lambda_at(config.lambda_schedule, fraction)

        batch = sampler.next_batch()
        reals, means, stds = normalize_batch(batch.inputs)

        if phase == FINETUNE:
            reals = inject_noise(
                reals, config.input_noise_variance, self.noiserng
            )

        loss_d = self.dstep(reals, batch.targets, means, stds)

        low, high = config.gen_updates
        updates = int(self.updaterng.integers(low, high + 1))

        losses = [
            self.gstep(len(reals), means, stds, lam) for _ in range(updates)
        ]
        loss_g1 = float(np.mean([loss[0] for loss in losses]))
        loss_g2 = float(np.mean([loss[1] for loss in losses]))

        record = TelemetryRecord(
            iteration, phase, loss_d, loss_g1, loss_g2, lam, updates
        )

        if not np.all(np.isfinite([loss_d, loss_g1, loss_g2])):
            raise NumericalError(
                'Non-finite loss at iteration {0}: {1}.'.format(
                    iteration, record
                ),
                iteration=iteration
            )

        self.telemetry.append(record)

        if self.logger is not None and config.log_every > 0 and \
                iteration % config.log_every == 0:
            self.logger.info(
                'cgan {0} iter {1}: L_D={2:.4f} L_G1={3:.4f} L_G2={4:.4f} '
                'lambda={5} u={6}'.format(
                    phase, iteration, loss_d, loss_g1, loss_g2, lam, updates
                )
            )

    def run(self, phases):

        iteration = 0

        for phase, ds, iters in phases:

            if not iters:
                continue

            half = min(self.config.batch_size // 2, len(ds))

            if half < 2:
                raise ValueError(
                    '{0} needs at least 2 samples, got {1}.'.format(
                        phase, len(ds)
                    )
                )

            sampler = BatchSampler(
                ds, half, rng=self.batchrng, drop_last=True
            )

            for _ in range(iters):

                try:
                    self.iterate(iteration, phase, sampler)

                except NumericalError as ex:
                    if ex.iteration is None:
                        ex.iteration = iteration
                    if self.logger is not None:
                        self.logger.error(
                            'cgan {0} aborted at iteration {1}: {2}'.format(
                                phase, iteration, ex
                            )
                        )
                    raise

                iteration += 1


def train_cgan(pretrain, finetune, baseline, config=None, logger=None):
    """Pre-train then fine-tune a conditional GAN.

    The baseline classifier is never updated.

    :param LabeledDataset pretrain: external (larger) dataset.
    :param LabeledDataset finetune: target dataset.
    :param MlpModel baseline: frozen softmax classifier d -> K.
    :param CGanConfig config: hyper-parameters (default CGanConfig()).
    :param Logger logger: optional progress logger.
    :rtype: TrainedCGan
    :raises: ValueError on dimension mismatch, NumericalError on non-finite
        losses (with the iteration index).
    """

    if config is None:
        config = CGanConfig()

    dim, num_classes = _check(pretrain, finetune, baseline)

    trainer = _Trainer(baseline, config, dim, num_classes, logger=logger)

    if logger is not None:
        logger.info(
            'cgan training: {0} pretrain + {1} finetune iterations, '
            'G {2}, D {3}.'.format(
                config.pretrain_iters, config.finetune_iters,
                trainer.generator.layer_dims, trainer.discriminator.layer_dims
            )
        )

    trainer.run((
        (PRETRAIN, pretrain, config.pretrain_iters),
        (FINETUNE, finetune, config.finetune_iters)
    ))

    return TrainedCGan(
        generator=trainer.generator, discriminator=trainer.discriminator,
        baseline_ref=model_hash(baseline), config=config,
        num_classes=num_classes, telemetry=trainer.telemetry
    )


def generate(cgan, n_per_class, rng):
    """Sample G([noise; one_hot(k)]) n_per_class[k] times per class k.

    Rows are grouped by class, in class order.

    :param TrainedCGan cgan: trained model.
    :param list n_per_class: K non-negative counts.
    :param rng: seed or numpy Generator.
    :rtype: FakeDataset
    :raises: ValueError on wrong request length or all-zero request.
    """

    counts = [int(count) for count in n_per_class]

    if len(counts) != cgan.num_classes:
        raise ValueError(
            '{0} counts for {1} classes.'.format(len(counts), cgan.num_classes)
        )

    if any(count < 0 for count in counts) or not sum(counts):
        raise ValueError('Wrong sample request {0}.'.format(counts))

    rng = torng(rng)

    labels = np.concatenate([
        np.full(count, label, dtype=np.int64)
        for label, count in enumerate(counts)
    ])

    noise = rng.normal(size=(len(labels), cgan.config.noise_dim))
    inputs = np.hstack([noise, one_hot_matrix(labels, cgan.num_classes)])

    return FakeDataset(
        forward(cgan.generator, inputs), labels, num_classes=cgan.num_classes
    )
