# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------

"""augforge command line.

Subcommands::

    augforge synth  [--dim D] [--per-class N] [-o FILE]
    augforge train  [--finetune-iters N]
    augforge eval
    augforge sweep  [--ns 500,1000]
    augforge tsne   [--subsample N]

All of them accept ``--config PATH``, ``--seed INT``, ``--out DIR`` and
repeatable ``--set category.key=value`` overrides.

Exit codes: 0 on success, 2 on configuration or input errors, 3 on numerical
failures.
"""

__all__ = ['main', 'parser', 'OK', 'CONFIG_ERROR', 'NUMERICAL_ERROR']

from argparse import ArgumentParser

from os import makedirs
from os.path import exists, join

from sys import stderr

from traceback import format_exc

from ..cgan.core import generate, train_cgan
from ..cgan.io import save_cgan, write_telemetry
from ..conf.driver.base import ConfDriver
from ..data.core import LabeledDataset, subset
from ..data.io import load_dataset, save_dataset
from ..data.synth import make_synthetic
from ..eval.bag import bag_predict, carve_holdout, tune_bag_weights
from ..eval.core import EvalReport, evaluate, score
from ..eval.report import ReportRow, write_report, write_sweep
from ..eval.sweep import balanced_counts, size_sweep
from ..nn.core import NumericalError
from ..nn.io import ModelFileError, load_model, save_model
from ..rand import substream, substream_seed
from ..svg import line_chart, write_svg
from ..tsne.project import (
    coverage, project_real_vs_fake, scatter_svg, write_points
)
from .run import CLASSIFIER_TAGS, RunConfig

OK = 0  #: success exit code.
CONFIG_ERROR = 2  #: configuration, validation or input error exit code.
NUMERICAL_ERROR = 3  #: non-finite loss exit code.

PRETRAIN, TRAIN, TEST = 'pretrain.csv', 'train.csv', 'test.csv'
BASELINE = 'baseline.model'
TELEMETRY = 'telemetry.csv'
FAKE = 'fake.csv'
REPORT = 'report.csv'
SWEEP, SWEEP_SVG = 'sweep.csv', 'sweep.svg'
POINTS, SCATTER = 'points.csv', 'scatter.svg'
RUN_CONF = 'run.conf'

#: (argument destination, configuration key) of command line shortcuts.
SHORTCUTS = (
    ('seed', 'run.seed'),
    ('out', 'run.out'),
    ('dim', 'synth.dim'),
    ('per_class', 'synth.per_class'),
    ('finetune_iters', 'cgan.finetune_iters'),
    ('ns', 'sweep.ns'),
    ('subsample', 'tsne.subsample')
)

#: report names of single classifiers and ensembles.
NAMES = {'b': 'C_b', 'f': 'C_f', 't': 'C_t'}

#: errors reported with CONFIG_ERROR.
INPUT_ERRORS = (
    RunConfig.Error, ValueError, IOError, ModelFileError, ConfDriver.Error
)


class _Datasets(object):
    """pretrain, train and test sets of a run."""

    __slots__ = ('pretrain', 'train', 'test')

    def __init__(self, pretrain, train, test):

        super(_Datasets, self).__init__()

        self.pretrain = pretrain
        self.train = train
        self.test = test


def _outdir(run):

    result = run.run.out

    if not exists(result):
        makedirs(result)

    return result


def _synthesize(run):
    """Synthetic pretrain, train and test sets from the run seed."""

    synth, seed = run.synth, run.run.seed

    return _Datasets(*(
        make_synthetic(synth.spec(
            per_class, substream_seed(seed, 'data', name)
        )) for name, per_class in (
            ('pretrain', synth.pretrain_per_class),
            ('train', synth.train_per_class),
            ('test', synth.test_per_class)
        )
    ))


def _load(paths, num_classes):
    """Load datasets with a shared class count."""

    result = [
        None if not path else load_dataset(path, num_classes or None)
        for path in paths
    ]

    count = num_classes or max(
        ds.num_classes for ds in result if ds is not None
    )

    return [
        ds if ds is None or ds.num_classes == count
        else LabeledDataset(ds.features, ds.labels, count)
        for ds in result
    ]


def _datasets(run, logger, write=False):
    """Configured datasets, else datasets of the output directory.

    :param bool write: synthesize and write missing datasets.
    """

    data, out = run.data, _outdir(run)

    if not data.synthetic:
        return _Datasets(*_load(
            (data.pretrain, data.train, data.test), data.num_classes
        ))

    paths = [join(out, name) for name in (PRETRAIN, TRAIN, TEST)]

    if write:
        result = _synthesize(run)
        for ds, path in zip(
                (result.pretrain, result.train, result.test), paths
        ):
            save_dataset(ds, path)
        logger.info('synthetic datasets written in {0}.'.format(out))
        return result

    for path in paths:
        if not exists(path):
            raise IOError(
                'Missing dataset {0}: run train first or set data.*.'.format(
                    path
                )
            )

    return _Datasets(*_load(paths, data.num_classes))


def _holdout(run, train):
    """(rest, holdout) datasets of the bagging carve of train."""

    rest, holdout = carve_holdout(
        train, run.evaluation.holdout,
        seed=substream_seed(run.run.seed, 'eval', 'holdout')
    )

    return subset(train, rest), subset(train, holdout)


def cmd_synth(args, run, logger):
    """Write one synthetic dataset."""

    synth = run.synth

    ds = make_synthetic(synth.spec(
        synth.per_class, substream_seed(run.run.seed, 'data', 'synth')
    ))

    path = args.output or join(_outdir(run), 'synthetic.csv')

    save_dataset(ds, path)

    logger.info('synthetic dataset written in {0}.'.format(path))

    print('n={0} d={1} K={2}'.format(len(ds), ds.dim, ds.num_classes))


def cmd_train(args, run, logger):
    """Train the baseline and the cGAN, then generate fake samples."""

    out = _outdir(run)
    datasets = _datasets(run, logger, write=run.data.synthetic)
    seed = run.run.seed

    rest, _ = _holdout(run, datasets.train)
    pretrain = rest if datasets.pretrain is None else datasets.pretrain

    baseline = run.classifier.train(
        rest, seed=substream_seed(seed, 'classifier', 'b'), logger=logger
    )
    save_model(baseline, join(out, BASELINE))

    cgan = train_cgan(pretrain, rest, baseline, run.cgan, logger=logger)

    save_cgan(cgan, out)
    write_telemetry(cgan.telemetry, join(out, TELEMETRY))

    fake = generate(
        cgan, balanced_counts(run.evaluation.n_fake, rest.num_classes),
        substream(seed, 'generate')
    )
    save_dataset(fake, join(out, FAKE))

    run.save(join(out, RUN_CONF), logger=logger)

    logger.info('train artifacts written in {0}.'.format(out))


def _chance(test):

    chance = 1. / test.num_classes

    return EvalReport(
        accuracy=chance, n=len(test), correct=int(round(len(test) * chance)),
        p_value_vs_chance=0.5, significant_at_5pct=False
    )


def cmd_eval(args, run, logger):
    """Score single classifiers and bagged ensembles on the test set."""

    out = _outdir(run)
    datasets = _datasets(run, logger)
    options, seed = run.evaluation, run.run.seed
    test = datasets.test

    _, holdout = _holdout(run, datasets.train)

    baseline = load_model(join(out, BASELINE))
    fake = load_dataset(join(out, FAKE), test.num_classes)

    models = {'b': baseline}

    if 'f' in options.classifiers:
        models['f'] = run.classifier.train(
            fake, seed=substream_seed(seed, 'classifier', 'f'), logger=logger
        )

    if 't' in options.classifiers:
        if datasets.pretrain is None:
            raise ValueError('C_t needs a pretrain dataset (data.pretrain).')
        models['t'] = run.classifier.train(
            datasets.pretrain, seed=substream_seed(seed, 'classifier', 't'),
            logger=logger
        )

    rows = [ReportRow('chance', 'test', _chance(test))]

    for tag in CLASSIFIER_TAGS:
        if tag in models:
            rows.append(ReportRow(
                NAMES[tag], 'test',
                evaluate(models[tag], test, exact=options.exact)
            ))

    for tags in (('b', 'f'), ('b', 'f', 't')):

        if not all(tag in models for tag in tags):
            continue

        members = [models[tag] for tag in tags]

        weights = tune_bag_weights(members, holdout, options.grid_step)

        name = '+'.join(NAMES[tag] for tag in tags)

        logger.info('{0} weights {1}.'.format(name, weights.weights))

        rows.append(ReportRow(name, 'test', score(
            bag_predict(members, weights, test.features), test.labels,
            1. / test.num_classes, exact=options.exact
        )))

    write_report(rows, join(out, REPORT))

    for row in rows:
        print('{0}: {1:.4f} (p={2:.4g})'.format(
            row.classifier, row.report.accuracy, row.report.p_value_vs_chance
        ))


def _sweep_datasets(run, logger):
    """Configured datasets, or a synthetic training set large enough for
    the largest sweep size."""

    data, sweep = run.data, run.sweep

    if not data.synthetic:
        return _datasets(run, logger)

    synth, seed = run.synth, run.run.seed

    per_class = -(-max(sweep.ns) // synth.num_classes)

    return _Datasets(
        None,
        make_synthetic(synth.spec(
            per_class, substream_seed(seed, 'data', 'sweep', 'train')
        )),
        make_synthetic(synth.spec(
            sweep.test_per_class, substream_seed(seed, 'data', 'sweep', 'test')
        ))
    )


def cmd_sweep(args, run, logger):
    """Fake-as-test / fake-as-train accuracies over training sizes."""

    out = _outdir(run)
    sweep = run.sweep
    datasets = _sweep_datasets(run, logger)

    result = size_sweep(
        datasets.train, datasets.test, ns=sweep.ns, cgan_config=run.cgan,
        n_fake=sweep.n_fake, classifier=run.classifier,
        pretrain=datasets.pretrain, seed=run.run.seed,
        threads=sweep.threads or None, logger=logger
    )

    write_sweep(result, join(out, SWEEP))

    write_svg(
        line_chart(
            result.ns, [
                (
                    'fake as test',
                    [record.acc_fake_as_test for record in result]
                ),
                (
                    'fake as train',
                    [record.acc_fake_as_train for record in result]
                )
            ], title='accuracy on generated data'
        ),
        join(out, SWEEP_SVG)
    )

    logger.info('sweep written in {0}.'.format(out))


def cmd_tsne(args, run, logger):
    """Joint 2-D projection of real and fake samples."""

    out = _outdir(run)
    config, source = run.tsne
    datasets = _datasets(run, logger)

    real = getattr(datasets, source)

    if real is None:
        raise ValueError('No {0} dataset to project.'.format(source))

    fake_path = join(out, FAKE)

    if not exists(fake_path):
        raise IOError('Missing {0}: run train first.'.format(fake_path))

    fake = load_dataset(fake_path, real.num_classes)

    result = project_real_vs_fake(real, fake, config=config, logger=logger)

    write_points(result, join(out, POINTS))
    write_svg(
        scatter_svg(result, title='real and fake samples'),
        join(out, SCATTER)
    )

    print('coverage={0:.4f} final_kl={1:.6f}'.format(
        coverage(result), result.final_kl
    ))


def parser():
    """Command line parser.

    :rtype: argparse.ArgumentParser
    """

    common = ArgumentParser(add_help=False)
    common.add_argument('--config', '-c', help='key=value run configuration')
    common.add_argument('--seed', type=int, help='global seed (run.seed)')
    common.add_argument('--out', help='output directory (run.out)')
    common.add_argument(
        '--set', action='append', default=[], dest='overrides',
        metavar='KEY=VALUE', help='configuration override, repeatable'
    )

    result = ArgumentParser(
        prog='augforge',
        description='Conditional GAN data augmentation experiments.'
    )

    commands = result.add_subparsers(dest='command')
    commands.required = True

    synth = commands.add_parser(
        'synth', parents=[common], help='write a synthetic dataset'
    )
    synth.add_argument('--dim', type=int, help='synth.dim')
    synth.add_argument('--per-class', type=int, help='synth.per_class')
    synth.add_argument('--output', '-o', help='dataset file')
    synth.set_defaults(func=cmd_synth)

    train = commands.add_parser(
        'train', parents=[common], help='train the baseline and the cGAN'
    )
    train.add_argument(
        '--finetune-iters', type=int, help='cgan.finetune_iters'
    )
    train.set_defaults(func=cmd_train)

    evaluate_ = commands.add_parser(
        'eval', parents=[common], help='write the accuracy report'
    )
    evaluate_.set_defaults(func=cmd_eval)

    sweep = commands.add_parser(
        'sweep', parents=[common], help='training size sweep'
    )
    sweep.add_argument('--ns', help='sweep.ns, comma separated sizes')
    sweep.set_defaults(func=cmd_sweep)

    tsne = commands.add_parser(
        'tsne', parents=[common], help='real vs fake projection'
    )
    tsne.add_argument('--subsample', type=int, help='tsne.subsample')
    tsne.set_defaults(func=cmd_tsne)

    return result


def overrides(args):
    """--set values followed by the shortcut flags given in args."""

    result = list(args.overrides)

    for dest, key in SHORTCUTS:
        value = getattr(args, dest, None)
        if value is not None:
            result.append('{0}={1}'.format(key, value))

    return result


def main(argv=None):
    """Run one subcommand.

    :return: exit code.
    :rtype: int
    """

    args = parser().parse_args(argv)

    try:
        run = RunConfig.load(args.config, overrides(args))

    except RunConfig.Error as ex:
        stderr.write('augforge: {0}\n'.format(ex))
        return CONFIG_ERROR

    logger = run.logger()

    try:
        args.func(args, run, logger)

    except NumericalError as ex:
        logger.error('{0} (iteration {1})\n{2}'.format(
            ex, ex.iteration, format_exc()
        ))
        return NUMERICAL_ERROR

    except INPUT_ERRORS as ex:
        logger.error('{0}\n{1}'.format(ex, format_exc()))
        return CONFIG_ERROR

    return OK
