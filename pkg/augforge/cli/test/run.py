# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------

"""cli.run UTs."""

from unittest import main

from b3j0f.utils.ut import UTCase

from io import open

from logging import ERROR

from os.path import join

from tempfile import mkdtemp

from shutil import rmtree

from ...conf.driver.base import ConfDriver
from ...rand import substream_seed
from ...tsne.core import TsneConfig
from ..run import RunConfig, CLASSIFIER_TAGS


class RunConfigTest(UTCase):

    def setUp(self):

        self.tmpdir = mkdtemp()
        self.path = join(self.tmpdir, 'run.conf')

    def tearDown(self):

        rmtree(self.tmpdir)

    def _write(self, text):

        with open(self.path, 'w', encoding='utf-8') as handle:
            handle.write(text)

        return self.path

    def test_defaults(self):

        run = RunConfig.load()

        self.assertEqual(run.run.seed, 0)
        self.assertEqual(run.run.out, 'out')
        self.assertTrue(run.data.synthetic)
        self.assertEqual(run.synth.dim, 50)
        self.assertEqual(run.evaluation.classifiers, CLASSIFIER_TAGS)
        self.assertEqual(run.cgan.seed, substream_seed(0, 'cgan'))

        config, source = run.tsne

        self.assertIs(type(config), TsneConfig)
        self.assertEqual(config.seed, substream_seed(0, 'tsne'))
        self.assertEqual(source, 'test')

    def test_file(self):

        run = RunConfig.load(self._write(
            '# tiny run\nrun.seed=7\ncgan.seed=3\nsynth.dim=8\n'
            'cgan.generator_hidden=16,16\n'
        ))

        self.assertEqual(run.run.seed, 7)
        self.assertEqual(run.synth.dim, 8)
        self.assertEqual(run.cgan.seed, 3)
        self.assertEqual(run.cgan.generator_hidden, (16, 16))
        self.assertEqual(run.tsne[0].seed, substream_seed(7, 'tsne'))

    def test_overrides(self):

        run = RunConfig.load(
            self._write('run.seed=7\n'),
            ['run.seed=9', 'eval.classifiers=b,f', 'tsne.real=train']
        )

        self.assertEqual(run.run.seed, 9)
        self.assertEqual(run.evaluation.classifiers, ('b', 'f'))
        self.assertEqual(run.tsne[1], 'train')
        self.assertEqual(run.cgan.seed, substream_seed(9, 'cgan'))

    def test_explicit_seed(self):

        run = RunConfig.load(overrides=['run.seed=9', 'cgan.seed=0'])

        self.assertEqual(run.cgan.seed, 0)

    def test_missing_file(self):

        self.assertRaises(
            RunConfig.Error, RunConfig.load, join(self.tmpdir, 'none.conf')
        )

    def test_unknown_keys(self):

        self.assertRaises(
            RunConfig.Error, RunConfig.load, self._write('cgan.alpha=1\n')
        )
        self.assertRaises(
            RunConfig.Error, RunConfig.load, self._write('gan.seed=1\n')
        )
        self.assertRaises(
            RunConfig.Error, RunConfig.load, overrides=['cgan.alpha=1']
        )
        self.assertRaises(RunConfig.Error, RunConfig.load, overrides=['seed=1'])
        self.assertRaises(
            RunConfig.Error, RunConfig.load, overrides=['run.seed']
        )

    def test_malformed_file(self):

        self.assertRaises(
            RunConfig.Error, RunConfig.load, self._write('run.seed\n')
        )

    def test_invalid_values(self):

        for override in (
                'run.seed=abc', 'eval.holdout=2', 'eval.classifiers=f',
                'eval.classifiers=b,x', 'cgan.smoothing=0.2',
                'cgan.lambda=0.5@0.8,2@0.2', 'tsne.real=fake',
                'log.lvl=LOUD', 'sweep.ns=1,20', 'synth.dim=1',
                'data.train=' + join(self.tmpdir, 'train.csv')
        ):
            self.assertRaises(
                RunConfig.Error, RunConfig.load, overrides=[override]
            )

    def test_missing_dataset(self):

        self.assertRaises(
            RunConfig.Error, RunConfig.load, overrides=[
                'data.train=' + join(self.tmpdir, 'train.csv'),
                'data.test=' + join(self.tmpdir, 'test.csv')
            ]
        )

    def test_dumps(self):

        run = RunConfig.load(overrides=['run.seed=4', 'synth.dim=6'])

        text = run.dumps()

        self.assertIn('run.seed=4\n', text)
        self.assertIn('synth.dim=6\n', text)

        reloaded = RunConfig.load(self._write(text))

        self.assertEqual(reloaded.run.seed, 4)
        self.assertEqual(reloaded.synth, run.synth)
        self.assertEqual(reloaded.cgan.copy(seed=0), run.cgan.copy(seed=0))

    def test_save(self):

        run = RunConfig.load(overrides=['run.seed=4'])

        run.save(self.path)

        with open(self.path, encoding='utf-8') as handle:
            self.assertEqual(handle.read(), run.dumps())

        self.assertEqual(RunConfig.load(self.path).run.seed, 4)

    def test_save_missing_dir(self):

        run = RunConfig.load()

        self.assertRaises(
            ConfDriver.Error, run.save, join(self.tmpdir, 'no', 'run.conf')
        )

    def test_logger(self):

        logger = RunConfig.load(
            overrides=['log.name=augforge.test', 'log.lvl=ERROR']
        ).logger()

        self.assertEqual(logger.name, 'augforge.test')
        self.assertEqual(logger.level, ERROR)


if __name__ == '__main__':
    main()
