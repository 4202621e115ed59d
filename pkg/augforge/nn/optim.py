# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""Optimizers.

``optimizer_step`` is deterministic and returns a new model and a new state;
inputs are left untouched.
"""

__all__ = [
    'OptimizerState', 'new_optimizer', 'optimizer_step', 'SGD_MOMENTUM', 'ADAM'
]

import numpy as np

from .core import NumericalError

SGD_MOMENTUM = 'sgd_momentum'
ADAM = 'adam'

KINDS = (SGD_MOMENTUM, ADAM)  #: optimizer kinds.


class OptimizerState(object):
    """Optimizer hyper-parameters, per-parameter buffers and step count.

    Buffers follow MlpModel.params order. sgd_momentum keeps one velocity
    buffer per parameter, adam keeps first and second moments.
    """

    __slots__ = (
        'kind', 'learning_rate', 'momentum', 'beta1', 'beta2', 'eps',
        'buffers', 'step_count'
    )

    class Error(ValueError):
        """Handle optimizer configuration errors."""

    def __init__(
            self, kind=ADAM, learning_rate=1e-3, momentum=0.9, beta1=0.9,
            beta2=0.999, eps=1e-8, buffers=None, step_count=0
    ):

        super(OptimizerState, self).__init__()

        if kind not in KINDS:
            raise OptimizerState.Error(
                'Wrong optimizer {0!r}, one of {1} expected.'.format(kind, KINDS)
            )

        if not learning_rate > 0:
            raise OptimizerState.Error(
                'Learning rate must be positive, got {0!r}.'.format(
                    learning_rate
                )
            )

        self.kind = kind
        self.learning_rate = learning_rate
        self.momentum = momentum
        self.beta1 = beta1
        self.beta2 = beta2
        self.eps = eps
        self.buffers = {} if buffers is None else buffers
        self.step_count = step_count

    def copy(self, buffers=None, step_count=None):

        return OptimizerState(
            kind=self.kind, learning_rate=self.learning_rate,
            momentum=self.momentum, beta1=self.beta1, beta2=self.beta2,
            eps=self.eps,
            buffers=self.buffers if buffers is None else buffers,
            step_count=self.step_count if step_count is None else step_count
        )


def new_optimizer(model, kind=ADAM, learning_rate=1e-3, **kwargs):
    """Get a fresh optimizer state with zero buffers shaped like model.

    :param MlpModel model: model to optimize.
    :param str kind: sgd_momentum or adam.
    :param float learning_rate: step size.
    :param dict kwargs: momentum, beta1, beta2, eps.
    :rtype: OptimizerState
    """

    names = ('velocity', ) if kind == SGD_MOMENTUM else ('m', 'v')

    buffers = dict(
        (name, [np.zeros_like(param) for param in model.params()])
        for name in names
    )

    return OptimizerState(
        kind=kind, learning_rate=learning_rate, buffers=buffers, **kwargs
    )


def optimizer_step(model, grads, state):
    """Apply one optimizer update.

    :param MlpModel model: model to update.
    :param Gradients grads: gradients mirroring model parameters.
    :param OptimizerState state: optimizer state.
    :return: (new model, new state).
    :raises: ValueError on shape mismatch, NumericalError on non-finite
        gradients.
    """

    params = model.params()
    gparams = grads.params()

    if len(params) != len(gparams):
        raise ValueError(
            '{0} gradients for {1} parameters.'.format(len(gparams), len(params))
        )

    for index, (param, gparam) in enumerate(zip(params, gparams)):

        if np.shape(gparam) != param.shape:
            raise ValueError(
                'Gradient shape {0} for parameter shape {1}.'.format(
                    np.shape(gparam), param.shape
                )
            )

        if not np.all(np.isfinite(gparam)):
            layer = index // 2
            raise NumericalError(
                'Non-finite {0} gradient in layer {1}.'.format(
                    'weight' if index % 2 == 0 else 'bias', layer
                ),
                layer=layer
            )

    step_count = state.step_count + 1
    lr = state.learning_rate

    if state.kind == SGD_MOMENTUM:

        velocities = [
            state.momentum * velocity - lr * gparam
            for velocity, gparam in zip(state.buffers['velocity'], gparams)
        ]
        newparams = [param + vel for param, vel in zip(params, velocities)]
        buffers = {'velocity': velocities}

    else:

        b1, b2 = state.beta1, state.beta2
        ms = [
            b1 * m + (1. - b1) * gparam
            for m, gparam in zip(state.buffers['m'], gparams)
        ]
        vs = [
            b2 * v + (1. - b2) * gparam * gparam
            for v, gparam in zip(state.buffers['v'], gparams)
        ]
        mcorr = 1. - b1 ** step_count
        vcorr = 1. - b2 ** step_count
        newparams = [
            param - lr * (m / mcorr) / (np.sqrt(v / vcorr) + state.eps)
            for param, m, v in zip(params, ms, vs)
        ]
        buffers = {'m': ms, 'v': vs}

    newmodel = model.copy(weights=newparams[0::2], biases=newparams[1::2])

    return newmodel, state.copy(buffers=buffers, step_count=step_count)
