# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------

"""log UTs."""

from unittest import main

from b3j0f.utils.ut import UTCase

from io import StringIO, open

from logging import DEBUG, INFO, StreamHandler

from os.path import join

from shutil import rmtree

from tempfile import mkdtemp

from ..conf.model.cat import category
from ..conf.model.conf import configuration
from ..conf.model.param import Parameter
from ..log import LOG_PATH, Logger


class LoggerTest(UTCase):

    def setUp(self):

        self.streams = []

        def handler(logger):

            stream = StringIO()
            self.streams.append(stream)

            return StreamHandler(stream)

        self.handler = handler
        self.logger = Logger(name='augforge.test.log', handler=handler)

    def _outputs(self):

        return [stream.getvalue() for stream in self.streams if stream.getvalue()]

    def test_lvl(self):

        self.assertEqual(self.logger.logger.level, INFO)

        self.logger.lvl = DEBUG

        self.assertEqual(self.logger.logger.level, DEBUG)

    def test_one_handler_per_level(self):

        self.logger.logger.info('hello')

        outputs = self._outputs()

        self.assertEqual(len(outputs), 1)
        self.assertIn('[INFO] [augforge.test.log] hello', outputs[0])

    def test_filtered(self):

        self.logger.logger.debug('hidden')

        self.assertEqual(self._outputs(), [])

    def test_debug_format(self):

        self.logger.lvl = DEBUG
        self.logger.logger.debug('shown')

        outputs = self._outputs()

        self.assertEqual(len(outputs), 1)
        self.assertIn('[DEBUG]', outputs[0])
        self.assertIn('shown', outputs[0])

    def test_file(self):

        path = mkdtemp()

        try:
            logger = Logger(name='augforge_file', path=path)
            logger.logger.warning('written')

            for handler in list(logger.logger.handlers):
                handler.close()
                logger.logger.removeHandler(handler)

            logpath = join(path, 'augforge_file.log')

            with open(logpath, encoding='utf-8') as handle:
                self.assertIn('[WARNING] [augforge_file] written', handle.read())

        finally:
            rmtree(path)

    def test_fromconf(self):

        conf = configuration(category(
            'log', Parameter('name', value='augforge.test.conf'),
            Parameter('lvl', value='DEBUG')
        ))

        logger = Logger.fromconf(conf, handler=self.handler)

        self.assertEqual(logger.name, 'augforge.test.conf')
        self.assertEqual(logger.logger.level, DEBUG)

    def test_fromconf_without_category(self):

        logger = Logger.fromconf(configuration(), handler=self.handler)

        self.assertEqual(logger.name, Logger.DEFAULT_NAME)

    def test_fromconf_empty_value(self):

        conf = configuration(category(
            'log', Parameter('lvl', value=''), Parameter('path', value='')
        ))

        logger = Logger.fromconf(conf, handler=self.handler)

        self.assertEqual(logger.lvl, Logger.DEFAULT_LVL)
        self.assertEqual(logger.path, LOG_PATH)


if __name__ == '__main__':
    main()
