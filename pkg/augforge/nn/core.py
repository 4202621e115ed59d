# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""Dense feed-forward network engine.

An :class:`MlpModel` is a value object: forward passes never modify it and
training produces new models (see :mod:`augforge.nn.optim`). All arithmetic is
done in 64-bit floats.
"""

__all__ = [
    'MlpModel', 'Gradients', 'NumericalError', 'init_model', 'forward',
    'forward_trace', 'backward', 'model_hash',
    'RELU', 'TANH', 'SIGMOID', 'SOFTMAX', 'LINEAR'
]

from hashlib import sha256

import numpy as np

from scipy.special import expit, softmax

from ..rand import torng

RELU = 'relu'
TANH = 'tanh'
SIGMOID = 'sigmoid'
SOFTMAX = 'softmax'
LINEAR = 'linear'

HIDDEN_ACTIVATIONS = (RELU, TANH)  #: hidden layer activation tags.
OUTPUT_ACTIVATIONS = (SIGMOID, SOFTMAX, LINEAR)  #: output activation tags.


class NumericalError(ArithmeticError):
    """Non-finite loss, gradient or objective.

    :ivar int iteration: training iteration where it happened, if any.
    :ivar int layer: layer index where it happened, if any.
    """

    def __init__(self, msg, iteration=None, layer=None):

        super(NumericalError, self).__init__(msg)

        self.iteration = iteration
        self.layer = layer


class MlpModel(object):
    """Feed-forward network parameters and activation tags.

    weights[i] has shape (layer_dims[i+1], layer_dims[i]) and biases[i]
    has length layer_dims[i+1].
    """

    __slots__ = (
        'layer_dims', 'weights', 'biases', 'hidden_activation',
        'output_activation'
    )

    class Error(ValueError):
        """Handle model shape and activation errors."""

    def __init__(
            self, layer_dims, weights, biases,
            hidden_activation=RELU, output_activation=LINEAR
    ):
        """
        :param list layer_dims: positive layer widths, input first.
        :param list weights: per-layer (out, in) matrices.
        :param list biases: per-layer (out,) vectors.
        :param str hidden_activation: relu or tanh.
        :param str output_activation: sigmoid, softmax or linear.
        :raises: MlpModel.Error on inconsistent shapes or tags.
        """

        super(MlpModel, self).__init__()

        self.layer_dims = _checkdims(layer_dims)

        if hidden_activation not in HIDDEN_ACTIVATIONS:
            raise MlpModel.Error(
                'Wrong hidden activation {0!r}, one of {1} expected.'.format(
                    hidden_activation, HIDDEN_ACTIVATIONS
                )
            )

        if output_activation not in OUTPUT_ACTIVATIONS:
            raise MlpModel.Error(
                'Wrong output activation {0!r}, one of {1} expected.'.format(
                    output_activation, OUTPUT_ACTIVATIONS
                )
            )

        self.hidden_activation = hidden_activation
        self.output_activation = output_activation

        nlayers = len(self.layer_dims) - 1

        if len(weights) != nlayers or len(biases) != nlayers:
            raise MlpModel.Error(
                '{0} weight and bias arrays expected, got {1} and {2}.'.format(
                    nlayers, len(weights), len(biases)
                )
            )

        self.weights = []
        self.biases = []

        for index, (weight, bias) in enumerate(zip(weights, biases)):

            weight = np.asarray(weight, dtype=np.float64)
            bias = np.asarray(bias, dtype=np.float64)

            fan_in, fan_out = self.layer_dims[index: index + 2]

            if weight.shape != (fan_out, fan_in):
                raise MlpModel.Error(
                    'Layer {0}: weight shape {1} instead of {2}.'.format(
                        index, weight.shape, (fan_out, fan_in)
                    )
                )

            if bias.shape != (fan_out, ):
                raise MlpModel.Error(
                    'Layer {0}: bias shape {1} instead of {2}.'.format(
                        index, bias.shape, (fan_out, )
                    )
                )

            if not (np.all(np.isfinite(weight)) and np.all(np.isfinite(bias))):
                raise MlpModel.Error(
                    'Layer {0}: non-finite parameters.'.format(index)
                )

            self.weights.append(weight)
            self.biases.append(bias)

    @property
    def nlayers(self):
        """Number of weight layers."""

        return len(self.weights)

    @property
    def input_dim(self):

        return self.layer_dims[0]

    @property
    def output_dim(self):

        return self.layer_dims[-1]

    def params(self):
        """Parameters in file order: w0, b0, w1, b1, ...

        :rtype: list
        """

        result = []

        for weight, bias in zip(self.weights, self.biases):
            result.append(weight)
            result.append(bias)

        return result

    def copy(self, weights=None, biases=None):
        """Copy this model, optionally with new parameters.

        :rtype: MlpModel
        """

        if weights is None:
            weights = [weight.copy() for weight in self.weights]

        if biases is None:
            biases = [bias.copy() for bias in self.biases]

        return MlpModel(
            layer_dims=self.layer_dims, weights=weights, biases=biases,
            hidden_activation=self.hidden_activation,
            output_activation=self.output_activation
        )

    def __eq__(self, other):
        """Bitwise equality of architecture and parameters."""

        return isinstance(other, MlpModel) and \
            self.layer_dims == other.layer_dims and \
            self.hidden_activation == other.hidden_activation and \
            self.output_activation == other.output_activation and \
            all(
                np.array_equal(param, oparam)
                for param, oparam in zip(self.params(), other.params())
            )

    def __ne__(self, other):

        return not self.__eq__(other)

    __hash__ = None

    def __repr__(self):

        return 'MlpModel(dims={0}, act={1}/{2})'.format(
            self.layer_dims, self.hidden_activation, self.output_activation
        )


class Gradients(object):
    """Parameter gradients mirroring a model, plus optional input gradient."""

    __slots__ = ('weights', 'biases', 'inputs')

    def __init__(self, weights, biases, inputs=None):

        super(Gradients, self).__init__()

        self.weights = weights
        self.biases = biases
        self.inputs = inputs

    def params(self):
        """Gradients in the order of MlpModel.params."""

        result = []

        for weight, bias in zip(self.weights, self.biases):
            result.append(weight)
            result.append(bias)

        return result

    def __add__(self, other):

        return Gradients(
            weights=[a + b for a, b in zip(self.weights, other.weights)],
            biases=[a + b for a, b in zip(self.biases, other.biases)]
        )


def _checkdims(layer_dims):

    try:
        dims = [int(dim) for dim in layer_dims]

    except (TypeError, ValueError):
        raise MlpModel.Error('Wrong layer dims {0!r}.'.format(layer_dims))

    if len(dims) < 2:
        raise MlpModel.Error(
            'At least two layer dims expected, got {0!r}.'.format(layer_dims)
        )

    if any(dim < 1 for dim in dims) or any(
            dim != odim for dim, odim in zip(dims, layer_dims)
    ):
        raise MlpModel.Error(
            'Layer dims must be positive integers: {0!r}.'.format(layer_dims)
        )

    return dims


def init_model(layer_dims, hidden_activation=RELU, output_activation=LINEAR,
               seed=None):
    """Initialize a model with fan-in scaled gaussian weights and zero biases.

    The weight standard deviation is sqrt(2/fan_in) with relu hidden units and
    sqrt(1/fan_in) with tanh ones.

    :param list layer_dims: layer widths, input first.
    :param str hidden_activation: relu or tanh.
    :param str output_activation: sigmoid, softmax or linear.
    :param seed: int seed or numpy Generator.
    :rtype: MlpModel
    """

    dims = _checkdims(layer_dims)

    rng = torng(seed)

    gain = 2. if hidden_activation == RELU else 1.

    weights, biases = [], []

    for fan_in, fan_out in zip(dims[:-1], dims[1:]):
        scale = np.sqrt(gain / fan_in)
        weights.append(rng.normal(0., scale, size=(fan_out, fan_in)))
        biases.append(np.zeros(fan_out))

    return MlpModel(
        layer_dims=dims, weights=weights, biases=biases,
        hidden_activation=hidden_activation,
        output_activation=output_activation
    )


def _hidden(tag, values):

    if tag == RELU:
        return np.maximum(values, 0.)

    return np.tanh(values)


def _output(tag, values):

    if tag == SIGMOID:
        return expit(values)

    if tag == SOFTMAX:
        return softmax(values, axis=1)

    return values


def _checkinputs(model, inputs):

    inputs = np.asarray(inputs, dtype=np.float64)

    if inputs.ndim == 1:
        inputs = inputs[np.newaxis, :]

    if inputs.ndim != 2 or inputs.shape[1] != model.input_dim:
        raise MlpModel.Error(
            'Inputs of shape {0} for a model of input dim {1}.'.format(
                inputs.shape, model.input_dim
            )
        )

    return inputs


def forward_trace(model, inputs):
    """Get activations of every layer, inputs first and outputs last.

    :param MlpModel model: model to evaluate.
    :param inputs: (batch, input_dim) matrix.
    :rtype: list
    :raises: MlpModel.Error on dimension mismatch.
    """

    activations = [_checkinputs(model, inputs)]

    last = model.nlayers - 1

    for index, (weight, bias) in enumerate(zip(model.weights, model.biases)):

        values = activations[-1].dot(weight.T) + bias

        if index == last:
            values = _output(model.output_activation, values)

        else:
            values = _hidden(model.hidden_activation, values)

        activations.append(values)

    return activations


def forward(model, inputs):
    """Evaluate a model on a batch of inputs.

    :rtype: numpy.ndarray
    """

    return forward_trace(model, inputs)[-1]


def backward(model, inputs, loss_grad_at_output, input_grad=False):
    """Backpropagate the gradient of a loss w.r.t. the model outputs.

    :param MlpModel model: model to differentiate.
    :param inputs: inputs of the forward pass.
    :param loss_grad_at_output: dloss/doutputs, same shape as outputs.
    :param bool input_grad: also compute dloss/dinputs.
    :rtype: Gradients
    :raises: MlpModel.Error on shape mismatch.
    """

    activations = forward_trace(model, inputs)

    outputs = activations[-1]

    grad = np.asarray(loss_grad_at_output, dtype=np.float64)

    if grad.shape != outputs.shape:
        raise MlpModel.Error(
            'Loss gradient of shape {0} for outputs of shape {1}.'.format(
                grad.shape, outputs.shape
            )
        )

    # gradient w.r.t. the output pre-activation
    if model.output_activation == SIGMOID:
        delta = grad * outputs * (1. - outputs)

    elif model.output_activation == SOFTMAX:
        delta = outputs * (grad - np.sum(grad * outputs, axis=1, keepdims=True))

    else:
        delta = grad

    nlayers = model.nlayers
    weights, biases = [None] * nlayers, [None] * nlayers
    dinputs = None

    for index in range(nlayers - 1, -1, -1):

        weights[index] = delta.T.dot(activations[index])
        biases[index] = delta.sum(axis=0)

        if index > 0 or input_grad:

            dactivation = delta.dot(model.weights[index])

            if index == 0:
                dinputs = dactivation

            elif model.hidden_activation == RELU:
                delta = dactivation * (activations[index] > 0.)

            else:
                delta = dactivation * (1. - activations[index] ** 2)

    return Gradients(weights=weights, biases=biases, inputs=dinputs)


def model_hash(model):
    """SHA-256 hex digest of architecture and parameter bytes.

    :rtype: str
    """

    digest = sha256()

    digest.update(
        '{0}|{1}|{2}'.format(
            ' '.join(str(dim) for dim in model.layer_dims),
            model.hidden_activation, model.output_activation
        ).encode('ascii')
    )

    for param in model.params():
        digest.update(np.ascontiguousarray(param, dtype='<f8').tobytes())

    return digest.hexdigest()
