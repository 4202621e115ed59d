# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------

"""Named random substreams.

Every random draw of a run derives from one global seed. A component asks for
its own stream by name, so that adding a component never shifts the draws of
another one.

.. code-block:: python

    from augforge.rand import substream

    rng = substream(1, 'cgan', 'generator')
"""

__all__ = ['substream_seed', 'substream', 'torng']

from hashlib import sha256

from numpy.random import Generator, default_rng

SEPARATOR = '/'  #: component name separator.


def substream_seed(seed, *names):
    """Get the integer seed of a named substream.

    :param int seed: global seed.
    :param str names: component names, joined with SEPARATOR.
    :rtype: int
    """

    key = '{0}:{1}'.format(SEPARATOR.join(names), int(seed))

    digest = sha256(key.encode('utf-8')).digest()

    return int.from_bytes(digest[:8], 'little')


def substream(seed, *names):
    """Get a numpy generator dedicated to input component names.

    :rtype: numpy.random.Generator
    """

    return default_rng(substream_seed(seed, *names))


def torng(rng):
    """Convert an int seed (or None) to a generator. Generators pass through.

    :rtype: numpy.random.Generator
    """

    if isinstance(rng, Generator):
        return rng

    return default_rng(rng)
