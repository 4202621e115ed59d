# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""Central finite-difference gradient checks."""

__all__ = ['gradient_check', 'relative_error', 'numerical_gradient']

import numpy as np

STEP = 1e-5  #: default finite-difference step.


def numerical_gradient(func, values, step=STEP):
    """Central differences of a scalar function of one array.

    :param func: scalar function of an array shaped like values.
    :param numpy.ndarray values: evaluation point (left untouched).
    :rtype: numpy.ndarray
    """

    values = np.array(values, dtype=np.float64)
    result = np.zeros_like(values)

    flat = values.reshape(-1)
    gflat = result.reshape(-1)

    for index in range(flat.size):
        origin = flat[index]
        flat[index] = origin + step
        upper = func(values)
        flat[index] = origin - step
        lower = func(values)
        flat[index] = origin
        gflat[index] = (upper - lower) / (2. * step)

    return result


def relative_error(analytic, numeric, floor=1e-6):
    """Max elementwise |a - n| / max(|a|, |n|, floor)."""

    analytic = np.asarray(analytic, dtype=np.float64)
    numeric = np.asarray(numeric, dtype=np.float64)

    if not analytic.size:
        return 0.

    scale = np.maximum(np.maximum(np.abs(analytic), np.abs(numeric)), floor)

    return float(np.max(np.abs(analytic - numeric) / scale))


def gradient_check(loss, model, step=STEP):
    """Numerical gradients of loss(model) for every model parameter.

    :param loss: scalar function of a MlpModel.
    :param MlpModel model: evaluation point.
    :return: arrays in MlpModel.params order.
    :rtype: list
    """

    params = model.params()
    result = []

    for index, param in enumerate(params):

        def func(value, index=index):

            newparams = list(params)
            newparams[index] = value

            return loss(
                model.copy(weights=newparams[::2], biases=newparams[1::2])
            )

        result.append(numerical_gradient(func, param, step=step))

    return result
