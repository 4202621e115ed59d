# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------

"""cGAN training hyper-parameters."""

__all__ = ['CGanConfig', 'CATEGORY']

from ..conf.model.param import Array, SCHEDULE
from ..conf.view import ConfView
from ..nn.optim import ADAM, KINDS

CATEGORY = 'cgan'  #: configuration category name.

#: (attribute, configuration key, ptype, default, doc).
FIELDS = (
    ('noise_dim', 'noise_dim', int, 32, 'length of the noise vector'),
    (
        'lambda_schedule', 'lambda', SCHEDULE, ((0., 0.5), (0.8, 2.)),
        'classifier loss weight per run fraction, v[@fraction],...'
    ),
    (
        'smoothing_target', 'smoothing', float, 0.9,
        'discriminator target of real samples'
    ),
    (
        'input_noise_variance', 'noise_variance', float, 0.02,
        'variance of the noise added to real fine-tune batches'
    ),
    (
        'gen_updates', 'gen_updates', Array(int), (1, 3),
        'min,max generator updates per iteration'
    ),
    ('batch_size', 'batch_size', int, 64, 'real plus fake samples per batch'),
    ('pretrain_iters', 'pretrain_iters', int, 1000, 'pre-training iterations'),
    ('finetune_iters', 'finetune_iters', int, 500, 'fine-tuning iterations'),
    (
        'generator_hidden', 'generator_hidden', Array(int), (128, 128),
        'generator hidden layer widths'
    ),
    (
        'discriminator_hidden', 'discriminator_hidden', Array(int), (64, 32),
        'discriminator hidden layer widths'
    ),
    ('optimizer', 'optimizer', str, ADAM, 'adam or sgd_momentum'),
    ('learning_rate', 'learning_rate', float, 1e-3, 'optimizer step size'),
    ('momentum', 'momentum', float, 0.9, 'sgd_momentum momentum'),
    ('seed', 'seed', int, 0, 'random seed'),
    ('log_every', 'log_every', int, 100, 'iterations between log lines')
)


class CGanConfig(ConfView):
    """All cGAN training hyper-parameters.

    Generator and discriminator architectures derive from the hidden widths:
    [noise_dim + K, *generator_hidden, d] and [d + K, *discriminator_hidden, 1].
    """

    CATEGORY = CATEGORY

    FIELDS = FIELDS

    __slots__ = tuple(field[0] for field in FIELDS)

    class Error(ConfView.Error):
        """Handle invalid hyper-parameters."""

    def normalize(self):

        self.lambda_schedule = tuple(
            (float(at), float(lam)) for at, lam in self.lambda_schedule
        )
        self.gen_updates = tuple(int(count) for count in self.gen_updates)
        self.generator_hidden = tuple(self.generator_hidden)
        self.discriminator_hidden = tuple(self.discriminator_hidden)

    def validate(self):
        """Check hyper-parameter consistency.

        :raises: CGanConfig.Error.
        """

        errors = []

        if self.noise_dim < 1:
            errors.append('noise_dim must be positive')

        if not self.lambda_schedule:
            errors.append('empty lambda schedule')

        for at, lam in self.lambda_schedule:
            if not 0. <= at <= 1.:
                errors.append('lambda positions must lie in [0, 1]')
            if not 0. <= lam < float('inf'):
                errors.append('lambda values must be finite and >= 0')

        if not 0.5 < self.smoothing_target <= 1.:
            errors.append('smoothing must lie in (0.5, 1]')

        if not self.input_noise_variance >= 0.:
            errors.append('noise_variance must be >= 0')

        if len(self.gen_updates) != 2 or \
                not 1 <= self.gen_updates[0] <= self.gen_updates[1]:
            errors.append('gen_updates must be min,max with 1 <= min <= max')

        if self.batch_size < 4:
            errors.append('batch_size must be >= 4')

        if self.pretrain_iters < 0 or self.finetune_iters < 0:
            errors.append('iteration counts must be >= 0')

        if any(width < 1 for width in
               self.generator_hidden + self.discriminator_hidden):
            errors.append('hidden widths must be positive')

        if self.optimizer not in KINDS:
            errors.append('optimizer must be one of {0}'.format(KINDS))

        if not self.learning_rate > 0:
            errors.append('learning_rate must be positive')

        if errors:
            raise CGanConfig.Error('; '.join(errors))

    @property
    def total_iters(self):

        return self.pretrain_iters + self.finetune_iters

    def generator_dims(self, dim, num_classes):

        return [self.noise_dim + num_classes] + \
            list(self.generator_hidden) + [dim]

    def discriminator_dims(self, dim, num_classes):

        return [dim + num_classes] + list(self.discriminator_hidden) + [1]
