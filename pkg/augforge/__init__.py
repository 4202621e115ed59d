# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------

"""Conditional GAN feature-space data augmentation for low resource
classification.

Subpackages:

- nn: numpy multi layer perceptrons, losses and optimizers.
- data: labeled datasets, CSV files, synthetic tasks and batches.
- cgan: conditional GAN training driven by a frozen baseline classifier.
- eval: accuracies, significance, bagging and training size sweeps.
- tsne: joint 2-D projection of real and generated samples.
- conf: typed key=value run configuration.
- cli: the ``augforge`` command.
"""

__all__ = ['__version__', 'Logger', 'substream', 'substream_seed']

# b3j0f.utils still imports ABCs from collections (removed in python 3.10).
import collections as _collections
import collections.abc as _collections_abc

for _name in ('Iterable', 'Hashable', 'Callable', 'Mapping', 'Sequence'):
    if not hasattr(_collections, _name):
        setattr(_collections, _name, getattr(_collections_abc, _name))

from .version import __version__
from .log import Logger
from .rand import substream, substream_seed
