# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------

"""cli.core UTs."""

from unittest import main as utmain

from b3j0f.utils.ut import UTCase

from io import open

from os.path import exists, join

from tempfile import mkdtemp

from shutil import rmtree

import numpy as np

from ...data.io import load_dataset, save_dataset
from ...data.synth import SyntheticSpec, make_synthetic
from ...eval.report import REPORT_HEADER
from ..core import main, overrides, parser, OK, CONFIG_ERROR, NUMERICAL_ERROR

#: overrides of a run small enough for unit tests.
TINY = (
    'log.lvl=CRITICAL',
    'synth.dim=4', 'synth.separation=1', 'synth.pretrain_per_class=30',
    'synth.train_per_class=20', 'synth.test_per_class=15',
    'cgan.noise_dim=3', 'cgan.generator_hidden=8',
    'cgan.discriminator_hidden=8,4', 'cgan.batch_size=8',
    'cgan.pretrain_iters=5', 'cgan.finetune_iters=5', 'cgan.log_every=0',
    'classifier.hidden=4', 'classifier.epochs=1', 'classifier.batch_size=8',
    'eval.n_fake=40', 'eval.grid_step=0.25',
    'sweep.n_fake=20', 'sweep.test_per_class=10',
    'tsne.iterations=30', 'tsne.exaggeration_iters=10',
    'tsne.momentum_switch=10', 'tsne.subsample=10', 'tsne.log_every=0'
)


def _lines(path):

    with open(path, encoding='utf-8') as handle:
        return handle.read().splitlines()


class ParserTest(UTCase):

    def test_shortcuts(self):

        args = parser().parse_args([
            'train', '--seed', '3', '--out', 'here', '--finetune-iters', '0',
            '--set', 'cgan.noise_dim=4'
        ])

        self.assertEqual(
            overrides(args), [
                'cgan.noise_dim=4', 'run.seed=3', 'run.out=here',
                'cgan.finetune_iters=0'
            ]
        )

    def test_sweep_sizes(self):

        args = parser().parse_args(['sweep', '--ns', '20,40'])

        self.assertEqual(overrides(args), ['sweep.ns=20,40'])


class MainTest(UTCase):

    def setUp(self):

        self.tmpdir = mkdtemp()
        self.out = join(self.tmpdir, 'out')

    def tearDown(self):

        rmtree(self.tmpdir)

    def _main(self, command, *args, **kwargs):

        argv = [command, '--out', kwargs.get('out', self.out)]

        for override in TINY:
            argv += ['--set', override]

        return main(argv + list(args))

    def test_synth(self):

        path = join(self.tmpdir, 'synthetic.csv')

        self.assertEqual(
            self._main('synth', '--dim', '3', '--per-class', '5', '-o', path),
            OK
        )

        ds = load_dataset(path)

        self.assertEqual((len(ds), ds.dim, ds.num_classes), (10, 3, 2))

    def test_pipeline(self):

        self.assertEqual(self._main('train'), OK)

        for name in (
                'pretrain.csv', 'train.csv', 'test.csv', 'baseline.model',
                'generator.model', 'discriminator.model', 'cgan.manifest',
                'telemetry.csv', 'fake.csv', 'run.conf'
        ):
            self.assertTrue(exists(join(self.out, name)), name)

        fake = load_dataset(join(self.out, 'fake.csv'))

        self.assertEqual(len(fake), 40)
        self.assertEqual(fake.dim, 4)
        self.assertEqual(list(np.bincount(fake.labels)), [20, 20])

        # 10 iterations plus the header
        self.assertEqual(len(_lines(join(self.out, 'telemetry.csv'))), 11)

        self.assertEqual(self._main('eval'), OK)

        report = _lines(join(self.out, 'report.csv'))

        self.assertEqual(report[0], ','.join(REPORT_HEADER))
        self.assertEqual(
            [line.split(',')[0] for line in report[1:]], [
                'chance', 'C_b', 'C_f', 'C_t', 'C_b+C_f', 'C_b+C_f+C_t'
            ]
        )
        self.assertEqual(report[1], 'chance,test,30,0.5,0.5,false')

        self.assertEqual(self._main('tsne'), OK)

        points = _lines(join(self.out, 'points.csv'))

        self.assertEqual(points[0], 'x,y,source')
        self.assertEqual(len(points), 21)
        self.assertTrue(exists(join(self.out, 'scatter.svg')))

    def test_determinism(self):

        other = join(self.tmpdir, 'other')

        self.assertEqual(self._main('train', '--seed', '5'), OK)
        self.assertEqual(self._main('train', '--seed', '5', out=other), OK)

        for name in ('fake.csv', 'telemetry.csv'):
            self.assertEqual(
                _lines(join(self.out, name)), _lines(join(other, name))
            )

    def test_baseline_only(self):

        self.assertEqual(self._main('train'), OK)
        self.assertEqual(
            self._main('eval', '--set', 'eval.classifiers=b'), OK
        )

        report = _lines(join(self.out, 'report.csv'))

        self.assertEqual(
            [line.split(',')[0] for line in report[1:]], ['chance', 'C_b']
        )

    def test_pretrain_only(self):

        self.assertEqual(self._main('train', '--finetune-iters', '0'), OK)

        # pre-training iterations only
        self.assertEqual(len(_lines(join(self.out, 'telemetry.csv'))), 6)

    def test_dataset_files(self):

        paths = {}

        for name, per_class, seed in (
                ('train', 20, 1), ('test', 10, 2)
        ):
            paths[name] = join(self.tmpdir, '{0}.csv'.format(name))
            save_dataset(
                make_synthetic(SyntheticSpec(
                    dim=3, per_class=per_class, num_classes=3, seed=seed
                )),
                paths[name]
            )

        files = (
            '--set', 'data.train={0}'.format(paths['train']),
            '--set', 'data.test={0}'.format(paths['test']),
            '--set', 'eval.classifiers=b,f'
        )

        self.assertEqual(self._main('train', *files), OK)
        self.assertFalse(exists(join(self.out, 'train.csv')))
        self.assertEqual(load_dataset(join(self.out, 'fake.csv')).dim, 3)

        self.assertEqual(self._main('eval', *files), OK)
        self.assertEqual(len(_lines(join(self.out, 'report.csv'))), 5)

    def test_sweep(self):

        self.assertEqual(self._main('sweep', '--ns', '20,40'), OK)

        sweep = _lines(join(self.out, 'sweep.csv'))

        self.assertEqual(sweep[0], 'N,acc_fake_as_test,acc_fake_as_train')
        self.assertEqual([line.split(',')[0] for line in sweep[1:]], [
            '20', '40'
        ])

        with open(join(self.out, 'sweep.svg'), encoding='utf-8') as handle:
            self.assertEqual(handle.read().count('<polyline'), 2)

    def test_config_errors(self):

        self.assertEqual(
            self._main('train', '--set', 'cgan.alpha=1'), CONFIG_ERROR
        )
        self.assertEqual(
            self._main('train', '--config', join(self.tmpdir, 'none.conf')),
            CONFIG_ERROR
        )
        self.assertEqual(
            self._main('train', '--set', 'eval.holdout=1.5'), CONFIG_ERROR
        )

    def test_missing_artifacts(self):

        self.assertEqual(self._main('eval'), CONFIG_ERROR)
        self.assertEqual(self._main('tsne'), CONFIG_ERROR)

    def test_subsample_error(self):

        self.assertEqual(self._main('train'), OK)
        self.assertEqual(
            self._main('tsne', '--subsample', '41'), CONFIG_ERROR
        )

    def test_numerical_error(self):

        self.assertEqual(self._main('train'), OK)

        with np.errstate(all='ignore'):
            self.assertEqual(
                self._main(
                    'tsne', '--set', 'tsne.learning_rate=1e300',
                    '--set', 'tsne.exaggeration_iters=0'
                ),
                NUMERICAL_ERROR
            )


if __name__ == '__main__':
    utmain()
