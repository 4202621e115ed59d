# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------

"""Exact t-SNE in two dimensions.

High dimensional affinities are per-point gaussians whose bandwidths are
calibrated by bisection to a target perplexity, symmetrized into a joint
distribution P. The embedding minimizes KL(P || Q) where Q uses a Student-t
kernel with one degree of freedom, by gradient descent with momentum,
adaptive gains and early exaggeration.
"""

__all__ = [
    'TsneConfig', 'EmbeddingResult', 'conditional_affinities',
    'pairwise_affinities', 'squared_distances', 'kl_divergence',
    'kl_gradient', 'tsne_embed', 'REAL', 'FAKE'
]

from collections import namedtuple

import numpy as np

from scipy.spatial.distance import pdist, squareform

from ..conf.model.param import BOOL
from ..conf.view import ConfView
from ..nn.core import NumericalError
from ..rand import substream

REAL = 'real'  #: real point source tag.
FAKE = 'fake'  #: generated point source tag.

PERPLEXITY_TOLERANCE = 1e-4  #: bisection tolerance on the log2 entropy.

MAX_BISECTION_STEPS = 200

JITTER = 1e-10  #: coordinate noise std, relative to the feature scale.

INIT_STD = 1e-2  #: initial coordinates std (variance 1e-4).

MIN_GAIN = 0.01

#: (attribute, configuration key, ptype, default, doc).
FIELDS = (
    ('perplexity', 'perplexity', float, 30., 'effective neighbor count'),
    ('iterations', 'iterations', int, 1000, 'descent iterations'),
    ('learning_rate', 'learning_rate', float, 200., 'descent step size'),
    ('exaggeration', 'exaggeration', float, 12., 'early P multiplier'),
    (
        'exaggeration_iters', 'exaggeration_iters', int, 250,
        'iterations with exaggerated P'
    ),
    ('momentum', 'momentum', float, 0.5, 'initial momentum'),
    ('final_momentum', 'final_momentum', float, 0.8, 'late momentum'),
    (
        'momentum_switch', 'momentum_switch', int, 250,
        'iteration of the momentum change'
    ),
    ('gains', 'gains', BOOL, True, 'per-coordinate adaptive gains'),
    ('subsample', 'subsample', int, 2000, 'points per source to embed'),
    ('seed', 'seed', int, 0, 'random seed'),
    ('log_every', 'log_every', int, 100, 'iterations between KL checks')
)

#: embedded points, their source tag, KL(P || Q) at the end and the
#: (iteration, KL) checkpoints of the descent.
EmbeddingResult = namedtuple(
    'EmbeddingResult', ['coords', 'source_tags', 'final_kl', 'kl_trace']
)


class TsneConfig(ConfView):
    """t-SNE hyper-parameters."""

    CATEGORY = 'tsne'

    FIELDS = FIELDS

    __slots__ = tuple(field[0] for field in FIELDS)

    class Error(ConfView.Error):
        """Handle invalid t-SNE hyper-parameters."""

    def validate(self):

        errors = []

        if not self.perplexity > 1.:
            errors.append('perplexity must be > 1')

        if not 0 <= self.exaggeration_iters <= self.iterations:
            errors.append('exaggeration_iters must lie in [0, iterations]')

        if not self.learning_rate > 0.:
            errors.append('learning_rate must be positive')

        if not self.exaggeration >= 1.:
            errors.append('exaggeration must be >= 1')

        for momentum in (self.momentum, self.final_momentum):
            if not 0. <= momentum < 1.:
                errors.append('momentum must lie in [0, 1)')

        if self.subsample < 1:
            errors.append('subsample must be positive')

        if errors:
            raise TsneConfig.Error('; '.join(errors))


def _offdiagonal(matrix):

    count = len(matrix)

    return matrix[~np.eye(count, dtype=bool)].reshape(count, count - 1)


def _entropies(dists, betas):
    """Row distributions exp(-beta d) / Z and their log2 entropies.

    dists are shifted by their row minimum, so that Z >= 1."""

    weights = np.exp(-dists * betas[:, np.newaxis])
    totals = weights.sum(axis=1)
    probs = weights / totals[:, np.newaxis]

    entropies = (
        np.log(totals) + betas * np.sum(probs * dists, axis=1)
    ) / np.log(2.)

    return probs, entropies


def conditional_affinities(
        sqdists, perplexity, tolerance=PERPLEXITY_TOLERANCE,
        max_steps=MAX_BISECTION_STEPS
):
    """Conditional neighbor distributions P(j | i) of target perplexity.

    Every row precision beta = 1 / (2 sigma^2) is searched by bisection (with
    doubling / halving while unbounded) until |H_i - log2(perplexity)| is
    within tolerance. Rows are searched together.

    :param sqdists: (n, n) squared distances.
    :return: (n, n) conditional probabilities (zero diagonal) and the n
        precisions.
    :rtype: tuple
    :raises: NumericalError naming the rows left uncalibrated after
        max_steps, e.g. rows whose nearest neighbors are exact ties.
    """

    sqdists = np.asarray(sqdists, dtype=np.float64)
    count = len(sqdists)

    dists = _offdiagonal(sqdists)
    dists = dists - dists.min(axis=1, keepdims=True)

    target = np.log2(perplexity)

    means = dists.mean(axis=1)
    betas = np.where(means > 0., 1. / np.where(means > 0., means, 1.), 1.)
    lows = np.zeros(count)
    highs = np.full(count, np.inf)

    for _ in range(max_steps):

        _, entropies = _entropies(dists, betas)
        diffs = entropies - target

        pending = np.abs(diffs) > tolerance

        if not np.any(pending):
            break

        # too flat: sharpen
        up = pending & (diffs > 0.)
        lows[up] = betas[up]
        betas[up] = np.where(
            np.isinf(highs[up]), betas[up] * 2., (betas[up] + highs[up]) / 2.
        )

        down = pending & (diffs < 0.)
        highs[down] = betas[down]
        betas[down] = (betas[down] + lows[down]) / 2.

    else:
        _, entropies = _entropies(dists, betas)
        pending = np.abs(entropies - target) > tolerance

        if np.any(pending):
            raise NumericalError(
                'Perplexity {0} not reached for rows {1} after {2} '
                'bisection steps.'.format(
                    perplexity, np.flatnonzero(pending).tolist(), max_steps
                )
            )

    probs, _ = _entropies(dists, betas)

    result = np.zeros((count, count))
    result[~np.eye(count, dtype=bool)] = probs.ravel()

    return result, betas


def squared_distances(features, seed=0):
    """(n, n) squared distances of slightly jittered points.

    Gaussian noise of std JITTER times the largest absolute coordinate (at
    least 1) separates duplicate points.
    """

    features = np.asarray(features, dtype=np.float64)

    scale = max(float(np.max(np.abs(features))), 1.) if features.size else 1.

    jittered = features + substream(seed, 'tsne', 'jitter').normal(
        0., JITTER * scale, size=features.shape
    )

    return squareform(pdist(jittered, 'sqeuclidean'))


def pairwise_affinities(
        features, perplexity, tolerance=PERPLEXITY_TOLERANCE,
        max_steps=MAX_BISECTION_STEPS, seed=0
):
    """Symmetric joint affinities P = (P(j|i) + P(i|j)) / 2n.

    :param features: (n, d) points.
    :param int seed: jitter seed.
    :raises: ValueError if n < 3 or perplexity not in (1, n - 1),
        NumericalError if a row can not be calibrated.
    """

    features = np.asarray(features, dtype=np.float64)
    count = len(features)

    if count < 3:
        raise ValueError('At least 3 points expected, got {0}.'.format(count))

    if not 1. < perplexity < count - 1:
        raise ValueError(
            'Perplexity {0} out of (1, {1}).'.format(perplexity, count - 1)
        )

    conditional, _ = conditional_affinities(
        squared_distances(features, seed), perplexity, tolerance, max_steps
    )

    return (conditional + conditional.T) / (2. * count)


def _student(coords):
    """Student-t kernel values (zero diagonal) and their normalization Q."""

    kernel = 1. / (1. + squareform(pdist(coords, 'sqeuclidean')))
    np.fill_diagonal(kernel, 0.)

    return kernel, kernel / np.sum(kernel)


def kl_divergence(affinities, coords):
    """KL(P || Q) of an embedding.

    :rtype: float
    """

    affinities = np.asarray(affinities, dtype=np.float64)

    _, joint = _student(np.asarray(coords, dtype=np.float64))

    mask = affinities > 0.

    return float(np.sum(
        affinities[mask] * np.log(affinities[mask] / joint[mask])
    ))


def kl_gradient(affinities, coords):
    """dKL/dy_i = 4 sum_j (p_ij - q_ij) (y_i - y_j) / (1 + |y_i - y_j|^2).

    :rtype: numpy.ndarray
    """

    coords = np.asarray(coords, dtype=np.float64)

    kernel, joint = _student(coords)

    weights = (np.asarray(affinities, dtype=np.float64) - joint) * kernel

    return 4. * (weights.sum(axis=1)[:, np.newaxis] * coords - weights @ coords)


def _checked_kl(affinities, coords, iteration):

    result = kl_divergence(affinities, coords)

    if not np.isfinite(result):
        raise NumericalError(
            'Non-finite KL {0} at iteration {1}.'.format(result, iteration),
            iteration=iteration
        )

    return result


def tsne_embed(features, config=None, tags=None, logger=None):
    """Embed features in two dimensions.

    Less than 3 points are returned at their initial coordinates.

    :param features: (n, d) points.
    :param TsneConfig config: hyper-parameters.
    :param list tags: n source tags (default all REAL).
    :rtype: EmbeddingResult
    :raises: ValueError on infeasible perplexity, NumericalError on
        non-finite KL or gradient.
    """

    if config is None:
        config = TsneConfig()

    features = np.asarray(features, dtype=np.float64)
    count = len(features)

    tags = (REAL, ) * count if tags is None else tuple(tags)

    if len(tags) != count:
        raise ValueError('{0} tags for {1} points.'.format(len(tags), count))

    coords = substream(config.seed, 'tsne', 'init').normal(
        0., INIT_STD, size=(count, 2)
    )

    if count < 3:
        return EmbeddingResult(coords, tags, 0., [])

    affinities = pairwise_affinities(
        features, config.perplexity, seed=config.seed
    )

    update = np.zeros_like(coords)
    gains = np.ones_like(coords)

    trace = []

    for iteration in range(config.iterations):

        if iteration < config.exaggeration_iters:
            target = affinities * config.exaggeration

        else:
            target = affinities

        momentum = config.momentum if iteration < config.momentum_switch \
            else config.final_momentum

        grad = kl_gradient(target, coords)

        if not np.all(np.isfinite(grad)):
            raise NumericalError(
                'Non-finite t-SNE gradient at iteration {0}.'.format(
                    iteration
                ),
                iteration=iteration
            )

        if config.gains:
            same = update * grad < 0.
            gains[same] += 0.2
            gains[~same] *= 0.8
            np.maximum(gains, MIN_GAIN, out=gains)
            grad = gains * grad

        update = momentum * update - config.learning_rate * grad
        coords = coords + update
        coords -= coords.mean(axis=0)

        done = iteration + 1

        if done == config.exaggeration_iters or done == config.iterations or (
                config.log_every > 0 and done % config.log_every == 0
        ):
            kl = _checked_kl(affinities, coords, iteration)
            trace.append((done, kl))

            if logger is not None:
                logger.info('t-SNE iteration {0}: KL={1:.6f}'.format(done, kl))

    final = trace[-1][1] if trace else _checked_kl(affinities, coords, 0)

    return EmbeddingResult(coords, tags, final, trace)
