# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""key=value ConfDriver UTs."""

from unittest import main

from b3j0f.utils.ut import UTCase

from os import remove
from os.path import exists, join

from tempfile import mkdtemp

from shutil import rmtree

from ..kv import KVFileConfDriver
from ...base import ConfDriver
from ....model.conf import configuration
from ....model.cat import category
from ....model.param import Parameter, SCHEDULE, Array


class KVFileConfDriverTest(UTCase):
    """Test the KVFileConfDriver."""

    def setUp(self):

        self.driver = KVFileConfDriver()
        self.tmpdir = mkdtemp()
        self.path = join(self.tmpdir, 'run.conf')
        self.conf = configuration(
            category(
                'cgan',
                Parameter('lambda', value=((0., .5), (.8, 2.)), ptype=SCHEDULE),
                Parameter('generator_hidden', value=(128, 128), ptype=Array(int))
            ),
            category('run', Parameter('seed', value=1, ptype=int))
        )

    def tearDown(self):

        rmtree(self.tmpdir)

    def test_loads(self):

        resource = self.driver.loads(
            '# comment\n\ncgan.lambda = 0.5,2.0@0.8\r\nrun.seed=1\nrun.seed=2\n'
        )

        self.assertEqual(resource['cgan']['lambda'], '0.5,2.0@0.8')
        # last value wins
        self.assertEqual(resource['run']['seed'], '2')

    def test_loads_malformed(self):

        self.assertRaises(ConfDriver.Error, self.driver.loads, 'seed=1')
        self.assertRaises(ConfDriver.Error, self.driver.loads, 'run.seed')
        self.assertRaises(ConfDriver.Error, self.driver.loads, 'run.=1')

    def test_dumps(self):

        self.assertEqual(
            self.driver.dumps(self.conf),
            'cgan.lambda=0.5,2.0@0.8\n'
            'cgan.generator_hidden=128,128\n'
            'run.seed=1\n'
        )

    def test_scenario(self):

        self.assertIsNone(self.driver.getconf(self.path))

        self.driver.setconf(conf=self.conf, rscpath=self.path)

        self.assertTrue(exists(self.path))

        conf = self.driver.getconf(self.path, conf=self.conf)

        self.assertEqual(
            conf['cgan']['lambda'].value, ((0., .5), (.8, 2.))
        )
        self.assertEqual(conf['cgan']['generator_hidden'].value, (128, 128))
        self.assertEqual(conf['run']['seed'].value, 1)

        remove(self.path)

        self.assertIsNone(self.driver.getconf(self.path))

    def test_malformed_file(self):

        with open(self.path, 'w') as handle:
            handle.write('run.seed=1\nnot a key\n')

        self.assertRaises(ConfDriver.Error, self.driver.getconf, self.path)


if __name__ == '__main__':
    main()
