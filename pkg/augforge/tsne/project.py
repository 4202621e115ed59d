# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------

"""Joint projection of real and generated samples.

Both sources are subsampled to the same size and embedded together, so that
the two point clouds share one set of t-SNE parameters.
"""

__all__ = [
    'project_real_vs_fake', 'clamp_perplexity', 'coverage', 'write_points',
    'scatter_svg', 'POINTS_HEADER'
]

from csv import writer

from io import open

import numpy as np

from scipy.spatial import cKDTree

from ..rand import substream
from ..svg import scatter
from .core import FAKE, REAL, TsneConfig, tsne_embed

POINTS_HEADER = ('x', 'y', 'source')


def clamp_perplexity(perplexity, count):
    """Highest usable perplexity for count points: at most count / 2."""

    return min(float(perplexity), count / 2.)


def project_real_vs_fake(real, fake, subsample=None, config=None, logger=None):
    """Embed subsample real and subsample fake points jointly.

    :param LabeledDataset real: real samples.
    :param LabeledDataset fake: generated samples of the same dim.
    :param int subsample: points per source (default config.subsample).
    :param TsneConfig config: t-SNE settings.
    :rtype: EmbeddingResult
    :raises: ValueError if subsample is not in [1, min(len(real), len(fake))]
        or if dims differ.
    """

    if config is None:
        config = TsneConfig()

    if subsample is None:
        subsample = config.subsample

    if subsample < 1:
        raise ValueError('Subsample must be positive, got {0}.'.format(
            subsample
        ))

    if subsample > min(len(real), len(fake)):
        raise ValueError(
            'Subsample {0} exceeds the {1} real or {2} fake samples.'.format(
                subsample, len(real), len(fake)
            )
        )

    if real.dim != fake.dim:
        raise ValueError('Real dim {0} and fake dim {1} differ.'.format(
            real.dim, fake.dim
        ))

    rng = substream(config.seed, 'tsne', 'subsample')

    real_rows = np.sort(rng.choice(len(real), subsample, replace=False))
    fake_rows = np.sort(rng.choice(len(fake), subsample, replace=False))

    features = np.vstack([
        real.features[real_rows], fake.features[fake_rows]
    ])

    count = len(features)

    if count >= 3:
        config = config.copy(
            perplexity=clamp_perplexity(config.perplexity, count)
        )

    if logger is not None:
        logger.info(
            'projecting {0} real and {0} fake points (perplexity {1}).'.format(
                subsample, config.perplexity
            )
        )

    return tsne_embed(
        features, config, tags=(REAL, ) * subsample + (FAKE, ) * subsample,
        logger=logger
    )


def coverage(result):
    """Share of real points farther from every fake point than the median
    real-to-real nearest neighbor distance.

    High values mean fake points leave regions of the real cloud empty.

    :rtype: float
    :raises: ValueError with less than 2 real or 1 fake points.
    """

    tags = np.asarray(result.source_tags)

    real = result.coords[tags == REAL]
    fake = result.coords[tags == FAKE]

    if len(real) < 2 or not len(fake):
        raise ValueError('At least 2 real and 1 fake points expected.')

    real_nn = cKDTree(real).query(real, k=2)[0][:, 1]
    fake_nn = cKDTree(fake).query(real, k=1)[0]

    return float(np.mean(fake_nn > np.median(real_nn)))


def write_points(result, path):
    """Write embedded points as x,y,source CSV rows."""

    with open(path, 'w', encoding='utf-8', newline='') as handle:

        csv = writer(handle, lineterminator='\n')
        csv.writerow(POINTS_HEADER)

        for (x, y), tag in zip(result.coords, result.source_tags):
            csv.writerow([repr(float(x)), repr(float(y)), tag])


def scatter_svg(result, title=None):
    """800x800 scatter of an embedding, colored by source.

    :rtype: str
    """

    return scatter(result.coords, result.source_tags, title=title)
