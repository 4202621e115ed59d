# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""Conditional GAN for feature-space data augmentation."""

__all__ = [
    'CGanConfig', 'normalize_batch', 'inject_noise', 'train_cgan', 'generate',
    'discriminator_grads', 'generator_grads',
    'TrainedCGan', 'FakeDataset', 'TelemetryRecord', 'PRETRAIN', 'FINETUNE',
    'discriminator_loss', 'discriminator_loss_grad', 'generator_loss',
    'generator_loss_grad', 'lambda_at', 'save_cgan', 'load_cgan',
    'write_telemetry', 'CGanFileError'
]

from .config import CGanConfig
from .core import (
    normalize_batch, inject_noise, train_cgan, generate, discriminator_grads,
    generator_grads, TrainedCGan, FakeDataset, TelemetryRecord, PRETRAIN,
    FINETUNE
)
from .loss import (
    discriminator_loss, discriminator_loss_grad, generator_loss,
    generator_loss_grad, lambda_at
)
from .io import save_cgan, load_cgan, write_telemetry, CGanFileError
