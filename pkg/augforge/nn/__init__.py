# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""Minimal dense network engine."""

__all__ = [
    'MlpModel', 'Gradients', 'NumericalError', 'init_model', 'forward',
    'forward_trace', 'backward', 'model_hash',
    'RELU', 'TANH', 'SIGMOID', 'SOFTMAX', 'LINEAR',
    'binary_cross_entropy', 'binary_cross_entropy_grad',
    'categorical_cross_entropy', 'categorical_cross_entropy_grad', 'EPSILON',
    'OptimizerState', 'new_optimizer', 'optimizer_step', 'SGD_MOMENTUM', 'ADAM',
    'save_model', 'load_model', 'ModelFileError', 'VersionMismatchError',
    'MalformedModelError', 'ShapeMismatchError',
    'gradient_check', 'numerical_gradient', 'relative_error'
]

from .core import (
    MlpModel, Gradients, NumericalError, init_model, forward, forward_trace,
    backward, model_hash, RELU, TANH, SIGMOID, SOFTMAX, LINEAR
)
from .loss import (
    binary_cross_entropy, binary_cross_entropy_grad,
    categorical_cross_entropy, categorical_cross_entropy_grad, EPSILON
)
from .optim import (
    OptimizerState, new_optimizer, optimizer_step, SGD_MOMENTUM, ADAM
)
from .io import (
    save_model, load_model, ModelFileError, VersionMismatchError,
    MalformedModelError, ShapeMismatchError
)
from .check import gradient_check, numerical_gradient, relative_error
