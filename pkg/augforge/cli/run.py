# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------

"""Run configuration of the command line.

A run is described by one flat key=value file whose keys are prefixed by
their category (``cgan.lambda=0.5,2.0@0.8``). Values read from the file
override the declared defaults, then command line overrides apply. Every key
must be declared: unknown keys are errors.

Components without an explicit seed get one derived from ``run.seed``.
"""

__all__ = [
    'RunConfig', 'RunOptions', 'DataOptions', 'SynthOptions', 'EvalOptions',
    'SweepOptions', 'LogOptions', 'CLASSIFIER_TAGS'
]

from collections import OrderedDict

from os.path import exists

from six import reraise

from ..cgan.config import CGanConfig
from ..conf.driver.base import ConfDriver
from ..conf.driver.file.kv import KVFileConfDriver
from ..conf.model.conf import Configuration
from ..conf.model.param import Array, BOOL, Parameter
from ..conf.view import ConfView
from ..data.synth import SyntheticSpec
from ..eval.bag import HOLDOUT_FRACTION
from ..eval.core import ClassifierConfig
from ..eval.sweep import DEFAULT_FAKES, DEFAULT_NS
from ..log import Logger
from ..rand import substream_seed
from ..tsne.core import TsneConfig

#: single classifiers of the report: baseline, fake-trained, transfer.
CLASSIFIER_TAGS = ('b', 'f', 't')

#: datasets the projection may use as its real side.
REAL_SOURCES = ('pretrain', 'train', 'test')


class RunOptions(ConfView):
    """Global run settings."""

    CATEGORY = 'run'

    FIELDS = (
        ('seed', 'seed', int, 0, 'global seed of every random stream'),
        ('out', 'out', str, 'out', 'output directory')
    )

    __slots__ = tuple(field[0] for field in FIELDS)


class DataOptions(ConfView):
    """Dataset files. Empty paths select the synthetic task."""

    CATEGORY = 'data'

    FIELDS = (
        ('pretrain', 'pretrain', str, '', 'cGAN pre-training dataset'),
        ('train', 'train', str, '', 'limited training dataset'),
        ('test', 'test', str, '', 'test dataset'),
        ('num_classes', 'num_classes', int, 0, 'class count (0: inferred)')
    )

    __slots__ = tuple(field[0] for field in FIELDS)

    class Error(ConfView.Error):
        """Handle missing dataset files."""

    @property
    def synthetic(self):

        return not (self.train or self.test)

    def validate(self):

        if bool(self.train) != bool(self.test):
            raise DataOptions.Error('data.train and data.test go together.')

        for path in (self.pretrain, self.train, self.test):
            if path and not exists(path):
                raise DataOptions.Error('Missing dataset {0}.'.format(path))

        if self.num_classes < 0:
            raise DataOptions.Error('data.num_classes must be >= 0.')


class SynthOptions(ConfView):
    """Synthetic gaussian mixture task."""

    CATEGORY = 'synth'

    FIELDS = (
        ('dim', 'dim', int, 50, 'feature dimension'),
        ('num_classes', 'num_classes', int, 2, 'class count'),
        ('separation', 'separation', float, 0.15, 'class mean offset'),
        ('cov', 'cov', float, 1., 'isotropic class variance'),
        ('per_class', 'per_class', int, 1000, 'samples per class of synth'),
        (
            'pretrain_per_class', 'pretrain_per_class', int, 2000,
            'pre-training samples per class'
        ),
        (
            'train_per_class', 'train_per_class', int, 250,
            'limited training samples per class'
        ),
        ('test_per_class', 'test_per_class', int, 1000, 'test samples per class')
    )

    __slots__ = tuple(field[0] for field in FIELDS)

    class Error(ConfView.Error):
        """Handle invalid synthetic tasks."""

    def validate(self):

        try:
            for count in (
                    self.per_class, self.pretrain_per_class,
                    self.train_per_class, self.test_per_class
            ):
                self.spec(count, 0)

        except SyntheticSpec.Error as ex:
            raise SynthOptions.Error(str(ex))

    def spec(self, per_class, seed):
        """SyntheticSpec of per_class samples per class.

        :rtype: SyntheticSpec
        """

        return SyntheticSpec(
            dim=self.dim, per_class=per_class, num_classes=self.num_classes,
            separation=self.separation, cov=self.cov, seed=seed
        )


class EvalOptions(ConfView):
    """Report settings."""

    CATEGORY = 'eval'

    FIELDS = (
        (
            'classifiers', 'classifiers', Array(str), CLASSIFIER_TAGS,
            'single classifiers of the report among b, f and t'
        ),
        ('exact', 'exact', BOOL, False, 'exact binomial test'),
        (
            'holdout', 'holdout', float, HOLDOUT_FRACTION,
            'training share held out for bagging weights'
        ),
        ('grid_step', 'grid_step', float, 0.05, 'bagging weight resolution'),
        ('n_fake', 'n_fake', int, DEFAULT_FAKES, 'generated samples')
    )

    __slots__ = tuple(field[0] for field in FIELDS)

    class Error(ConfView.Error):
        """Handle invalid report settings."""

    def normalize(self):

        self.classifiers = tuple(tag.strip() for tag in self.classifiers)

    def validate(self):

        if not self.classifiers or \
                not set(self.classifiers) <= set(CLASSIFIER_TAGS) or \
                'b' not in self.classifiers:
            raise EvalOptions.Error(
                'eval.classifiers must contain b and only {0}.'.format(
                    CLASSIFIER_TAGS
                )
            )

        if not 0. < self.holdout < 1.:
            raise EvalOptions.Error('eval.holdout must lie in (0, 1).')

        if self.n_fake < 1:
            raise EvalOptions.Error('eval.n_fake must be positive.')


class SweepOptions(ConfView):
    """Training size sweep settings."""

    CATEGORY = 'sweep'

    FIELDS = (
        ('ns', 'ns', Array(int), DEFAULT_NS, 'training subset sizes'),
        ('n_fake', 'n_fake', int, DEFAULT_FAKES, 'generated samples per N'),
        (
            'threads', 'threads', int, 0,
            'parallel arms (0: AUGFORGE_THREADS or 1)'
        ),
        ('test_per_class', 'test_per_class', int, 1000, 'synthetic test size')
    )

    __slots__ = tuple(field[0] for field in FIELDS)

    class Error(ConfView.Error):
        """Handle invalid sweep settings."""

    def normalize(self):

        self.ns = tuple(int(size) for size in self.ns)

    def validate(self):

        if not self.ns or min(self.ns) < 2:
            raise SweepOptions.Error('sweep.ns must be sizes >= 2.')

        if self.n_fake < 1 or self.threads < 0 or self.test_per_class < 1:
            raise SweepOptions.Error(
                'sweep.n_fake and sweep.test_per_class must be positive, '
                'sweep.threads >= 0.'
            )


class LogOptions(ConfView):
    """Logger settings."""

    CATEGORY = Logger.CATEGORY

    FIELDS = (
        ('name', 'name', str, Logger.DEFAULT_NAME, 'logger name'),
        ('lvl', 'lvl', str, 'INFO', 'log level'),
        ('path', 'path', str, '', 'log directory (empty: standard error)')
    )

    __slots__ = tuple(field[0] for field in FIELDS)

    class Error(ConfView.Error):
        """Handle invalid log settings."""

    def validate(self):

        if self.lvl not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
            raise LogOptions.Error('Wrong log level {0!r}.'.format(self.lvl))


class _TsneOptions(TsneConfig):
    """t-SNE settings with the choice of the real dataset."""

    FIELDS = TsneConfig.FIELDS + (
        ('real', 'real', str, 'test', 'real dataset: pretrain, train or test'),
    )

    __slots__ = ('real', )

    def validate(self):

        super(_TsneOptions, self).validate()

        if self.real not in REAL_SOURCES:
            raise TsneConfig.Error(
                'tsne.real must be one of {0}.'.format(REAL_SOURCES)
            )

    def config(self):
        """Plain TsneConfig of these options."""

        return TsneConfig(**dict(
            (field[0], getattr(self, field[0])) for field in TsneConfig.FIELDS
        ))


#: run categories and their views, in file order.
VIEWS = OrderedDict(
    (view.CATEGORY, view) for view in (
        RunOptions, DataOptions, SynthOptions, CGanConfig, ClassifierConfig,
        EvalOptions, SweepOptions, _TsneOptions, LogOptions
    )
)


class RunConfig(object):
    """Resolved configuration of a run and its typed views."""

    __slots__ = ('conf', )

    class Error(ValueError):
        """Handle configuration errors."""

    def __init__(self, conf=None):

        super(RunConfig, self).__init__()

        self.conf = RunConfig.declare() if conf is None else conf

    @staticmethod
    def declare():
        """Default run configuration.

        :rtype: Configuration
        """

        result = Configuration()

        for view in VIEWS.values():
            result += view.declare()

        return result

    @classmethod
    def load(cls, path=None, overrides=(), logger=None):
        """Read a run configuration file and apply key=value overrides.

        :param str path: configuration file (optional).
        :param list overrides: ``category.key=value`` strings.
        :rtype: RunConfig
        :raises: RunConfig.Error on missing file, unknown key or invalid
            value.
        """

        conf = cls.declare()

        if path:

            driver = KVFileConfDriver()

            if not driver.rscpaths(path):
                raise RunConfig.Error('Missing configuration {0}.'.format(path))

            try:
                fileconf = driver.getconf(path, conf=conf, logger=logger)

            except ConfDriver.Error as ex:
                reraise(RunConfig.Error, RunConfig.Error(str(ex)))

            if fileconf is not None:

                conf.update(fileconf)

                for key, _ in fileconf.items_flat():
                    cname, pname = Configuration.splitkey(key)
                    conf[cname][pname].local = False

        for override in overrides:
            cls._override(conf, override)

        result = cls(conf)
        result.validate()

        return result

    @staticmethod
    def _override(conf, override):

        key, sep, svalue = override.partition('=')

        try:
            cname, pname = Configuration.splitkey(key)

        except NameError as ex:
            raise RunConfig.Error(str(ex))

        if not sep or cname not in VIEWS or \
                pname not in VIEWS[cname].declare():
            raise RunConfig.Error('Unknown key {0!r}.'.format(key.strip()))

        param = conf[cname][pname]
        param.svalue = svalue.strip()
        param.local = False

    def validate(self):
        """Check keys and build every view.

        :raises: RunConfig.Error naming the first wrong key or value.
        """

        for cname, category in self.conf.items():

            if cname not in VIEWS:
                raise RunConfig.Error('Unknown category {0!r}.'.format(cname))

            declared = VIEWS[cname].declare()

            for pname in category:
                if pname not in declared:
                    raise RunConfig.Error(
                        'Unknown key {0}.{1}.'.format(cname, pname)
                    )

        for cname in VIEWS:
            self.view(cname)

    def view(self, cname):
        """Typed view of a category.

        :raises: RunConfig.Error on unparsable or invalid values.
        """

        try:
            return VIEWS[cname].fromcat(self.conf[cname])

        except (Parameter.Error, ConfView.Error, TypeError) as ex:
            reraise(RunConfig.Error, RunConfig.Error(str(ex)))

    def _seed(self, cname):

        param = self.conf[cname]['seed']

        if param.local:
            return substream_seed(self.run.seed, cname)

        return param.value

    @property
    def run(self):

        return self.view(RunOptions.CATEGORY)

    @property
    def data(self):

        return self.view(DataOptions.CATEGORY)

    @property
    def synth(self):

        return self.view(SynthOptions.CATEGORY)

    @property
    def cgan(self):

        return self.view(CGanConfig.CATEGORY).copy(
            seed=self._seed(CGanConfig.CATEGORY)
        )

    @property
    def classifier(self):

        return self.view(ClassifierConfig.CATEGORY)

    @property
    def evaluation(self):

        return self.view(EvalOptions.CATEGORY)

    @property
    def sweep(self):

        return self.view(SweepOptions.CATEGORY)

    @property
    def tsne(self):
        """TsneConfig and the real dataset name."""

        options = self.view(_TsneOptions.CATEGORY)

        return options.config().copy(
            seed=self._seed(_TsneOptions.CATEGORY)
        ), options.real

    def logger(self):
        """Python logger of the log category."""

        return Logger.fromconf(self.conf).logger

    def dumps(self):
        """key=value text of the resolved configuration."""

        return KVFileConfDriver().dumps(self.conf)

    def save(self, path, logger=None):
        """Write the resolved configuration to a key=value file.

        :raises: ConfDriver.Error if path is not writable.
        """

        KVFileConfDriver().setconf(conf=self.conf, rscpath=path, logger=logger)
