# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------

"""End-to-end runs of the augforge command.

Full size runs take several minutes and only run when AUGFORGE_SLOW is set.
"""

from unittest import main as utmain, skipUnless

from b3j0f.utils.ut import UTCase

from csv import reader

from io import open

from os import environ
from os.path import join

from tempfile import mkdtemp

from shutil import rmtree

from ..cli.core import main, OK
from ..cli.test.core import TINY

SLOW = 'AUGFORGE_SLOW'  #: environment variable enabling long runs.


def _rows(path):

    with open(path, encoding='utf-8', newline='') as handle:
        return list(reader(handle))[1:]


def _read(path):

    with open(path, 'rb') as handle:
        return handle.read()


class AcceptanceTest(UTCase):

    def setUp(self):

        self.tmpdir = mkdtemp()

    def tearDown(self):

        rmtree(self.tmpdir)

    def _run(self, out, *argv):

        return main(list(argv) + ['--out', join(self.tmpdir, out)])

    def test_reproducible(self):

        tiny = []
        for override in TINY:
            tiny += ['--set', override]

        for out in ('first', 'second'):
            self.assertEqual(self._run(out, 'train', *tiny), OK)
            self.assertEqual(self._run(out, 'eval', *tiny), OK)

        for name in ('fake.csv', 'telemetry.csv', 'report.csv'):
            self.assertEqual(
                _read(join(self.tmpdir, 'first', name)),
                _read(join(self.tmpdir, 'second', name))
            )

    @skipUnless(environ.get(SLOW), 'long run')
    def test_augmentation(self):

        options = ['--set', 'log.lvl=WARNING', '--set', 'eval.classifiers=b,f']

        self.assertEqual(self._run('full', 'train', *options), OK)
        self.assertEqual(self._run('full', 'eval', *options), OK)

        rows = dict(
            (row[0], row)
            for row in _rows(join(self.tmpdir, 'full', 'report.csv'))
        )

        baseline = float(rows['C_b'][3])

        self.assertGreaterEqual(baseline, 0.70)
        self.assertLessEqual(baseline, 0.85)

        self.assertEqual(rows['C_f'][5], 'true')
        self.assertGreaterEqual(float(rows['C_b+C_f'][3]), baseline - 0.01)

    @skipUnless(environ.get(SLOW), 'long run')
    def test_sweep_trend(self):

        self.assertEqual(
            self._run(
                'sweep', 'sweep', '--ns', '500,1000,2000,4000',
                '--set', 'log.lvl=WARNING'
            ),
            OK
        )

        rows = _rows(join(self.tmpdir, 'sweep', 'sweep.csv'))

        self.assertEqual([row[0] for row in rows], [
            '500', '1000', '2000', '4000'
        ])

        for _, as_test, as_train in rows:
            self.assertGreaterEqual(float(as_test), float(as_train))

        self.assertGreater(float(rows[-1][1]), float(rows[0][1]))


if __name__ == '__main__':
    utmain()
