# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""Adversarial losses.

Discriminator loss with one-sided label smoothing (only real samples get the
smoothed target) and generator loss L_G = L_G1 + lambda * L_G2 where L_G1 is
the non-saturating -log D(fake) and L_G2 the frozen classifier cross-entropy
of the conditioning labels.
"""

__all__ = [
    'discriminator_loss', 'discriminator_loss_grad', 'generator_loss',
    'generator_loss_grad', 'lambda_at'
]

import numpy as np

from ..nn.loss import (
    binary_cross_entropy, binary_cross_entropy_grad,
    categorical_cross_entropy, categorical_cross_entropy_grad
)


def _rows(values, vector=False):

    values = np.asarray(values, dtype=np.float64)

    if vector:
        return len(values) if values.ndim > 1 else 1

    return max(values.size, 1)


def discriminator_loss(d_real, d_fake, smoothing_target=0.9):
    """Batch mean of BCE(d_real, smoothing_target) plus BCE(d_fake, 0).

    :param d_real: discriminator outputs on real pairs.
    :param d_fake: discriminator outputs on fake pairs.
    :param float smoothing_target: target of real samples.
    :rtype: float
    """

    return float(
        np.mean(binary_cross_entropy(d_real, smoothing_target)) +
        np.mean(binary_cross_entropy(d_fake, 0.))
    )


def discriminator_loss_grad(d_real, d_fake, smoothing_target=0.9):
    """Derivatives of discriminator_loss w.r.t. d_real and d_fake.

    :return: (dL/dd_real, dL/dd_fake) shaped like inputs.
    """

    return (
        binary_cross_entropy_grad(d_real, smoothing_target) / _rows(d_real),
        binary_cross_entropy_grad(d_fake, 0.) / _rows(d_fake)
    )


def generator_loss(d_fake, c_probs, y_f, lam):
    """Get (L_G, L_G1, L_G2), batch means.

    :param d_fake: discriminator outputs on fake pairs.
    :param c_probs: frozen classifier probabilities of fake samples.
    :param y_f: one-hot conditioning labels.
    :param float lam: weight of L_G2.
    :rtype: tuple
    """

    loss_g1 = float(np.mean(binary_cross_entropy(d_fake, 1.)))
    loss_g2 = float(np.mean(categorical_cross_entropy(c_probs, y_f)))

    return loss_g1 + lam * loss_g2, loss_g1, loss_g2


def generator_loss_grad(d_fake, c_probs, y_f, lam):
    """Derivatives of L_G w.r.t. d_fake and c_probs.

    :return: (dL_G/dd_fake, dL_G/dc_probs) shaped like inputs.
    """

    return (
        binary_cross_entropy_grad(d_fake, 1.) / _rows(d_fake),
        lam * categorical_cross_entropy_grad(c_probs, y_f) /
        _rows(c_probs, vector=True)
    )


def lambda_at(schedule, iteration_fraction):
    """Piecewise-constant schedule value at a run fraction.

    The value of the last item whose position is <= iteration_fraction
    applies; before the first position, the first value applies.

    :param schedule: ((position, value), ...) with increasing positions.
    :param float iteration_fraction: fraction in [0, 1].
    :rtype: float
    :raises: ValueError on empty schedule or fraction out of [0, 1].
    """

    if not schedule:
        raise ValueError('Empty lambda schedule.')

    if not 0. <= iteration_fraction <= 1.:
        raise ValueError(
            'Iteration fraction {0} out of [0, 1].'.format(iteration_fraction)
        )

    result = schedule[0][1]

    for at, value in schedule:
        if at <= iteration_fraction:
            result = value

        else:
            break

    return float(result)
