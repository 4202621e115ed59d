# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""Model files.

Layout::

    AUGFORGE-MLP v1
    dims: d0 d1 ... dk
    act: <hidden> <output>
    bytes: <payload byte count>
    <payload>

The payload holds little-endian 64-bit floats, layer after layer, weights
row-major then biases.
"""

__all__ = [
    'save_model', 'load_model', 'ModelFileError', 'VersionMismatchError',
    'MalformedModelError', 'ShapeMismatchError', 'MAGIC', 'VERSION'
]

from io import open

import numpy as np

from .core import MlpModel

MAGIC = 'AUGFORGE-MLP'  #: file magic.
VERSION = 'v1'  #: file format version.

DTYPE = np.dtype('<f8')  #: payload item type.


class ModelFileError(Exception):
    """Base error of model files."""


class VersionMismatchError(ModelFileError):
    """The file has been written with another format version."""


class MalformedModelError(ModelFileError):
    """The file is not a model file or is truncated."""


class ShapeMismatchError(ModelFileError):
    """Declared dims do not match the payload."""


def save_model(model, path):
    """Write a model file.

    :param MlpModel model: model to save.
    :param str path: file path.
    """

    payload = b''.join(
        np.ascontiguousarray(param, dtype=DTYPE).tobytes()
        for param in model.params()
    )

    header = '{0} {1}\ndims: {2}\nact: {3} {4}\nbytes: {5}\n'.format(
        MAGIC, VERSION, ' '.join(str(dim) for dim in model.layer_dims),
        model.hidden_activation, model.output_activation, len(payload)
    )

    with open(path, 'wb') as handle:
        handle.write(header.encode('ascii'))
        handle.write(payload)


def _field(line, name, path):

    try:
        line = line.decode('ascii')

    except UnicodeDecodeError:
        raise MalformedModelError('{0}: binary header.'.format(path))

    if not line.endswith('\n') or not line.startswith('{0}: '.format(name)):
        raise MalformedModelError(
            '{0}: missing {1!r} header line.'.format(path, name)
        )

    return line[len(name) + 2:].split()


def load_model(path):
    """Read a model file.

    :param str path: file path.
    :rtype: MlpModel
    :raises: VersionMismatchError, MalformedModelError, ShapeMismatchError.
    """

    with open(path, 'rb') as handle:

        magic = handle.readline()

        try:
            tokens = magic.decode('ascii').split()

        except UnicodeDecodeError:
            tokens = []

        if len(tokens) != 2 or tokens[0] != MAGIC:
            raise MalformedModelError('{0}: not a model file.'.format(path))

        if tokens[1] != VERSION:
            raise VersionMismatchError(
                '{0}: version {1} instead of {2}.'.format(
                    path, tokens[1], VERSION
                )
            )

        dims = _field(handle.readline(), 'dims', path)
        acts = _field(handle.readline(), 'act', path)
        nbytes = _field(handle.readline(), 'bytes', path)

        try:
            dims = [int(dim) for dim in dims]
            nbytes, = [int(count) for count in nbytes]
            hidden, output = acts

        except ValueError:
            raise MalformedModelError('{0}: unreadable header.'.format(path))

        payload = handle.read()

    if len(payload) != nbytes:
        raise MalformedModelError(
            '{0}: {1} payload bytes instead of {2}.'.format(
                path, len(payload), nbytes
            )
        )

    if len(dims) < 2 or any(dim < 1 for dim in dims):
        raise ShapeMismatchError('{0}: wrong dims {1}.'.format(path, dims))

    expected = sum(
        (fan_in + 1) * fan_out for fan_in, fan_out in zip(dims[:-1], dims[1:])
    ) * DTYPE.itemsize

    if expected != nbytes:
        raise ShapeMismatchError(
            '{0}: dims {1} need {2} bytes, payload has {3}.'.format(
                path, dims, expected, nbytes
            )
        )

    values = np.frombuffer(payload, dtype=DTYPE).astype(np.float64)

    weights, biases = [], []
    offset = 0

    for fan_in, fan_out in zip(dims[:-1], dims[1:]):
        count = fan_in * fan_out
        weights.append(values[offset: offset + count].reshape(fan_out, fan_in))
        offset += count
        biases.append(values[offset: offset + fan_out].copy())
        offset += fan_out

    try:
        return MlpModel(
            layer_dims=dims, weights=weights, biases=biases,
            hidden_activation=hidden, output_activation=output
        )

    except MlpModel.Error as ex:
        raise MalformedModelError('{0}: {1}'.format(path, ex))
