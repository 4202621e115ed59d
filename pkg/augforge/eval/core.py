# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""Classifier training and significance of accuracies against chance."""

__all__ = [
    'ClassifierConfig', 'EvalReport', 'train_classifier', 'predict_proba',
    'predict', 'evaluate', 'score', 'SIGNIFICANCE_LEVEL'
]

from collections import namedtuple

import numpy as np

from scipy.stats import binom, norm

from ..conf.model.param import Array
from ..conf.view import ConfView
from ..data.batch import BatchSampler
from ..nn.core import (
    HIDDEN_ACTIVATIONS, RELU, SOFTMAX, backward, forward, init_model
)
from ..nn.loss import categorical_cross_entropy, categorical_cross_entropy_grad
from ..nn.optim import ADAM, KINDS, new_optimizer, optimizer_step
from ..rand import substream

SIGNIFICANCE_LEVEL = 0.05  #: one-sided test level.

#: accuracy of correct / n and one-sided test of accuracy > chance.
EvalReport = namedtuple(
    'EvalReport',
    ['accuracy', 'n', 'correct', 'p_value_vs_chance', 'significant_at_5pct']
)


#: (attribute, configuration key, ptype, default, doc).
CLASSIFIER_FIELDS = (
    ('hidden', 'hidden', Array(int), (32, ), 'hidden layer widths'),
    ('epochs', 'epochs', int, 50, 'passes over the training set'),
    ('batch_size', 'batch_size', int, 32, 'mini-batch size'),
    ('learning_rate', 'learning_rate', float, 1e-3, 'optimizer step size'),
    ('optimizer', 'optimizer', str, ADAM, 'adam or sgd_momentum'),
    (
        'hidden_activation', 'hidden_activation', str, RELU,
        'relu or tanh hidden units'
    )
)


class ClassifierConfig(ConfView):
    """Shallow softmax classifier settings."""

    CATEGORY = 'classifier'

    FIELDS = CLASSIFIER_FIELDS

    __slots__ = tuple(field[0] for field in CLASSIFIER_FIELDS)

    class Error(ConfView.Error):
        """Handle invalid classifier settings."""

    def normalize(self):

        self.hidden = tuple(int(width) for width in self.hidden)

    def validate(self):

        if any(width < 1 for width in self.hidden):
            raise ClassifierConfig.Error('Hidden widths must be positive.')

        if self.epochs < 0 or self.batch_size < 1:
            raise ClassifierConfig.Error(
                'Wrong epochs {0} or batch size {1}.'.format(
                    self.epochs, self.batch_size
                )
            )

        if self.optimizer not in KINDS:
            raise ClassifierConfig.Error(
                'Optimizer must be one of {0}.'.format(KINDS)
            )

        if self.hidden_activation not in HIDDEN_ACTIVATIONS:
            raise ClassifierConfig.Error(
                'Hidden activation must be one of {0}.'.format(
                    HIDDEN_ACTIVATIONS
                )
            )

        if not self.learning_rate > 0:
            raise ClassifierConfig.Error('learning_rate must be positive.')

    def dims(self, dim, num_classes):
        """[d, *hidden, K]."""

        return [dim] + list(self.hidden) + [num_classes]

    def train(self, ds, seed=0, logger=None):
        """Train a classifier on ds with these settings."""

        return train_classifier(
            ds, self.dims(ds.dim, ds.num_classes), epochs=self.epochs,
            seed=seed, batch_size=self.batch_size,
            learning_rate=self.learning_rate, optimizer=self.optimizer,
            hidden_activation=self.hidden_activation, logger=logger
        )


def train_classifier(
        train, dims, epochs=50, seed=0, batch_size=32, learning_rate=1e-3,
        optimizer=ADAM, hidden_activation=RELU, logger=None
):
    """Train a softmax classifier by minimizing the categorical cross-entropy.

    :param LabeledDataset train: training set.
    :param list dims: [d, ..., K].
    :param int epochs: passes over train (0 returns the initial model).
    :param int seed: seed of initialization and batch order.
    :rtype: MlpModel
    :raises: ValueError on empty train or dims not matching train.
    """

    if not len(train):
        raise ValueError('Empty training set.')

    dims = list(dims)

    if dims[0] != train.dim or dims[-1] != train.num_classes:
        raise ValueError(
            'Classifier dims {0} for dim {1} and {2} classes.'.format(
                dims, train.dim, train.num_classes
            )
        )

    model = init_model(
        dims, hidden_activation, SOFTMAX,
        seed=substream(seed, 'classifier', 'init')
    )

    if not epochs:
        return model

    state = new_optimizer(model, optimizer, learning_rate=learning_rate)

    sampler = BatchSampler(
        train, min(batch_size, len(train)),
        rng=substream(seed, 'classifier', 'batches')
    )

    for epoch in range(epochs):

        losses = []

        for batch in sampler.epoch():

            probs = forward(model, batch.inputs)
            losses.append(
                np.mean(categorical_cross_entropy(probs, batch.targets))
            )

            grad = categorical_cross_entropy_grad(probs, batch.targets) / \
                len(batch)

            model, state = optimizer_step(
                model, backward(model, batch.inputs, grad), state
            )

        if logger is not None:
            logger.debug('classifier {0} epoch {1}: loss={2:.4f}'.format(
                dims, epoch, float(np.mean(losses))
            ))

    return model


def predict_proba(model, features):
    """Class probabilities of a softmax model."""

    return forward(model, features)


def predict(model, features):
    """Argmax class predictions."""

    return np.argmax(forward(model, features), axis=1)


def score(predictions, labels, chance, exact=False):
    """Accuracy of predictions and its significance against chance.

    The default test is the one-sided normal approximation
    z = (acc - chance) / sqrt(chance * (1 - chance) / n). With exact, the
    binomial tail P(X >= correct) is used instead.

    :rtype: EvalReport
    :raises: ValueError on empty inputs or chance out of (0, 1).
    """

    predictions = np.asarray(predictions)
    labels = np.asarray(labels)

    count = len(labels)

    if not count:
        raise ValueError('Empty test set.')

    if len(predictions) != count:
        raise ValueError('{0} predictions for {1} labels.'.format(
            len(predictions), count
        ))

    if not 0. < chance < 1.:
        raise ValueError('Chance level {0} out of (0, 1).'.format(chance))

    correct = int(np.sum(predictions == labels))
    accuracy = correct / float(count)

    if exact:
        p_value = float(binom.sf(correct - 1, count, chance))

    else:
        zscore = (accuracy - chance) / np.sqrt(chance * (1. - chance) / count)
        p_value = float(norm.sf(zscore))

    p_value = min(max(p_value, 0.), 1.)

    return EvalReport(
        accuracy=accuracy, n=count, correct=correct,
        p_value_vs_chance=p_value,
        significant_at_5pct=p_value < SIGNIFICANCE_LEVEL
    )


def evaluate(model, test, chance=None, exact=False):
    """Score model on test.

    :param MlpModel model: softmax classifier.
    :param LabeledDataset test: test set.
    :param float chance: chance accuracy (default 1 / K).
    :rtype: EvalReport
    """

    if not len(test):
        raise ValueError('Empty test set.')

    if chance is None:
        chance = 1. / test.num_classes

    return score(predict(model, test.features), test.labels, chance, exact)
