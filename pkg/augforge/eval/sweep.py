# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""Training-set size sweep of generated data quality.

For each N, a cGAN is trained on the first N samples of a fixed permutation
of the training set (subsets are nested). Its generated samples are scored
twice: as a test set of a reference classifier trained on the whole training
set, and as the training set of a fresh classifier tested on real data.
"""

__all__ = [
    'SweepRecord', 'SweepResult', 'size_sweep', 'balanced_counts',
    'sweep_threads', 'arm_threads', 'DEFAULT_NS', 'AUGFORGE_THREADS'
]

from collections import namedtuple

from concurrent.futures import ThreadPoolExecutor

from os import environ

from ..cgan.config import CGanConfig
from ..cgan.core import generate, train_cgan
from ..data.core import subset
from ..rand import substream, substream_seed
from .core import ClassifierConfig, evaluate

DEFAULT_NS = (500, 1000, 2000, 4000, 8000)  #: default sweep sizes.

DEFAULT_FAKES = 10000  #: default generated samples per arm.

AUGFORGE_THREADS = 'AUGFORGE_THREADS'  #: arm parallelism env variable.

#: per-N sweep measures. acc_baseline is the test accuracy of the classifier
#: trained on the N real samples.
SweepRecord = namedtuple(
    'SweepRecord', ['n', 'acc_fake_as_test', 'acc_fake_as_train', 'acc_baseline']
)


class SweepResult(object):
    """Sweep records by strictly increasing N."""

    __slots__ = ('records', )

    class Error(ValueError):
        """Handle unordered records."""

    def __init__(self, records):

        super(SweepResult, self).__init__()

        records = list(records)

        ns = [record.n for record in records]

        if any(n >= onext for n, onext in zip(ns, ns[1:])):
            raise SweepResult.Error(
                'Sweep sizes must strictly increase: {0}.'.format(ns)
            )

        self.records = records

    @property
    def ns(self):

        return [record.n for record in self.records]

    def __iter__(self):

        return iter(self.records)

    def __len__(self):

        return len(self.records)


def balanced_counts(total, num_classes):
    """Split total in num_classes counts differing by at most one."""

    base, extra = divmod(total, num_classes)

    return [base + (1 if label < extra else 0) for label in range(num_classes)]


def sweep_threads(default=1):
    """Arm parallelism from AUGFORGE_THREADS (at least 1)."""

    try:
        return max(int(environ.get(AUGFORGE_THREADS, default)), 1)

    except ValueError:
        return default


def arm_threads(threads=None):
    """Parallel arms of a sweep: threads capped by AUGFORGE_THREADS.

    :param int threads: requested arms. Default is AUGFORGE_THREADS.
    """

    if threads is None:
        return sweep_threads()

    threads = max(threads, 1)

    return min(threads, sweep_threads(threads))


def _arm(size, order, full_train, test, reference, pretrain, cgan_config,
         classifier, n_fake, seed, logger):

    sub = subset(full_train, order[:size])

    baseline = classifier.train(
        sub, seed=substream_seed(seed, 'sweep', str(size), 'baseline')
    )

    config = cgan_config.copy(
        seed=substream_seed(seed, 'sweep', str(size), 'cgan')
    )

    cgan = train_cgan(
        sub if pretrain is None else pretrain, sub, baseline, config
    )

    fake = generate(
        cgan, balanced_counts(n_fake, full_train.num_classes),
        substream(seed, 'sweep', str(size), 'generate')
    )

    fake_classifier = classifier.train(
        fake, seed=substream_seed(seed, 'sweep', str(size), 'fake')
    )

    record = SweepRecord(
        n=size,
        acc_fake_as_test=evaluate(reference, fake).accuracy,
        acc_fake_as_train=evaluate(fake_classifier, test).accuracy,
        acc_baseline=evaluate(baseline, test).accuracy
    )

    if logger is not None:
        logger.info(
            'sweep N={0}: fake as test {1:.4f}, fake as train {2:.4f}, '
            'baseline {3:.4f}'.format(
                size, record.acc_fake_as_test, record.acc_fake_as_train,
                record.acc_baseline
            )
        )

    return record


def size_sweep(
        full_train, test, ns=DEFAULT_NS, cgan_config=None,
        n_fake=DEFAULT_FAKES, classifier=None, pretrain=None, seed=0,
        threads=None, logger=None
):
    """Run the fake-as-test / fake-as-train sweep.

    :param LabeledDataset full_train: real training set.
    :param LabeledDataset test: real test set.
    :param list ns: subset sizes.
    :param CGanConfig cgan_config: cGAN settings (seed is derived per arm).
    :param int n_fake: generated samples per arm, balanced over classes.
    :param ClassifierConfig classifier: settings of every classifier.
    :param LabeledDataset pretrain: cGAN pre-training set (default: the
        N-subset itself).
    :param int seed: sweep seed.
    :param int threads: parallel arms, capped by AUGFORGE_THREADS when set.
    :rtype: SweepResult
    :raises: ValueError if a size is not in [2, len(full_train)].
    """

    ns = sorted(set(int(size) for size in ns))

    if not ns:
        raise ValueError('Empty sweep sizes.')

    if ns[0] < 2 or ns[-1] > len(full_train):
        raise ValueError(
            'Sweep sizes {0} out of [2, {1}].'.format(ns, len(full_train))
        )

    if n_fake < 1:
        raise ValueError('n_fake must be positive, got {0}.'.format(n_fake))

    if cgan_config is None:
        cgan_config = CGanConfig()

    if classifier is None:
        classifier = ClassifierConfig()

    threads = arm_threads(threads)

    order = substream(seed, 'sweep', 'order').permutation(len(full_train))

    reference = classifier.train(
        full_train, seed=substream_seed(seed, 'sweep', 'reference')
    )

    if logger is not None:
        logger.info('sweep over N={0} with {1} thread(s).'.format(ns, threads))

    args = (
        order, full_train, test, reference, pretrain, cgan_config,
        classifier, n_fake, seed, logger
    )

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            records = list(executor.map(lambda size: _arm(size, *args), ns))

    else:
        records = [_arm(size, *args) for size in ns]

    return SweepResult(records)
