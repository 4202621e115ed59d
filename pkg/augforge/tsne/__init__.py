# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------

"""Two dimensional projection of real and generated samples."""

__all__ = [
    'TsneConfig', 'EmbeddingResult', 'conditional_affinities',
    'pairwise_affinities', 'squared_distances', 'kl_divergence',
    'kl_gradient', 'tsne_embed', 'REAL', 'FAKE', 'project_real_vs_fake',
    'clamp_perplexity', 'coverage', 'write_points', 'scatter_svg'
]

from .core import (
    TsneConfig, EmbeddingResult, conditional_affinities, pairwise_affinities,
    kl_divergence, kl_gradient, tsne_embed, squared_distances, REAL, FAKE
)
from .project import (
    project_real_vs_fake, clamp_perplexity, coverage, write_points,
    scatter_svg
)
