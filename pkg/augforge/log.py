# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""Logging setup shared by the command line and the training loops.

Each level gets its own handler and message format. Library functions never
create loggers themselves: they take an optional logger argument and stay
silent without it.
"""

__all__ = ['Logger']

from logging import (
    Formatter, getLogger, FileHandler, StreamHandler, Filter, INFO
)

from os import environ
from os.path import join, sep

from sys import stderr

from b3j0f.utils.property import addproperties

AUGFORGE_LOG_PATH = 'AUGFORGE_LOG_PATH'  #: log path environment variable.

LOG_PATH = environ.get(AUGFORGE_LOG_PATH)  #: default log path (None: stderr).


def _filehandler(logger):
    """Logging file handler in the logger path."""

    filename = logger.name.replace('.', sep)
    path = join(logger.path, '{0}.log'.format(filename))

    return FileHandler(path, mode='a+')


def _streamhandler(logger):
    """Logging handler on the standard error."""

    return StreamHandler(stderr)


def defaulthandler(logger):
    """Use a file handler if the logger has a path, stderr otherwise."""

    if logger.path:
        return _filehandler(logger)

    return _streamhandler(logger)


def _updatelogger(self, *args, **kwargs):
    """Renew self logger."""

    if self._logger is not None:
        self._logger = self.newlogger()


@addproperties(
    names=[
        'lvl', 'name', 'path', 'handler', 'debug_format', 'info_format',
        'warning_format', 'error_format', 'critical_format'
    ], afset=_updatelogger
)
@addproperties(names=['logger'])
class Logger(object):
    """Owns a python logger configured from the ``log`` run category."""

    CATEGORY = 'log'  #: configuration category name.

    # log messages format.
    #: debug message format.
    DEBUG_FORMAT = "[%(asctime)s] [%(levelname)s] [%(name)s] \
[%(process)d] [%(thread)d] [%(pathname)s] [%(lineno)d] %(message)s"
    #: info message format.
    INFO_FORMAT = "[%(asctime)s] [%(levelname)s] [%(name)s] %(message)s"
    WARNING_FORMAT = INFO_FORMAT  #: warning message format.
    ERROR_FORMAT = WARNING_FORMAT  #: error message format.
    CRITICAL_FORMAT = ERROR_FORMAT  #: critical message format.

    DEFAULT_NAME = 'augforge'  #: default logger name.
    DEFAULT_LVL = INFO  #: default level.

    def __init__(
            self, name=DEFAULT_NAME, lvl=DEFAULT_LVL, path=LOG_PATH,
            handler=defaulthandler, debug_format=DEBUG_FORMAT,
            info_format=INFO_FORMAT, warning_format=WARNING_FORMAT,
            error_format=ERROR_FORMAT, critical_format=CRITICAL_FORMAT,
            *args, **kwargs
    ):
        """
        :param str name: python logger name.
        :param lvl: logging level (int or level name). Default is INFO.
        :param str path: log directory. Default is the environment variable
            AUGFORGE_LOG_PATH or None for standard error.
        :param handler: function which takes in parameter this Logger and
            returns a logging Handler.
        """

        super(Logger, self).__init__(*args, **kwargs)

        self._logger = None
        self._name = name
        self._lvl = lvl
        self._path = path
        self._handler = handler
        self._debug_format = debug_format
        self._info_format = info_format
        self._warning_format = warning_format
        self._error_format = error_format
        self._critical_format = critical_format

        self._logger = self.newlogger()

    def newlogger(self):
        """Get a new python logger related to self properties."""

        result = getLogger(self.name)
        result.setLevel(self.lvl)
        result.propagate = False

        def sethandler(logger, lvl, _format):
            """Set right handler related to input lvl and format."""

            class _Filter(Filter):
                """Ensure message will be given for specific lvl."""
                def filter(self, record):
                    return record.levelname == lvl

            handler = self._handler(self)
            handler.addFilter(_Filter())
            handler.setLevel(lvl)
            handler.setFormatter(Formatter(_format))

            attr = '_augforge_{0}'.format(lvl)

            # if an old handler exist, remove it from logger
            old_handler = getattr(logger, attr, None)
            if old_handler is not None:
                logger.removeHandler(old_handler)
                old_handler.close()

            logger.addHandler(handler)
            setattr(logger, attr, handler)

        sethandler(result, 'DEBUG', self._debug_format)
        sethandler(result, 'INFO', self._info_format)
        sethandler(result, 'WARNING', self._warning_format)
        sethandler(result, 'ERROR', self._error_format)
        sethandler(result, 'CRITICAL', self._critical_format)

        return result

    @classmethod
    def fromconf(cls, conf, **kwargs):
        """Instantiate a Logger from the ``log`` category of a configuration.

        Empty values stand for unset parameters.

        :param Configuration conf: run configuration.
        :param dict kwargs: additional constructor parameters.
        :rtype: Logger
        """

        category = conf.get(cls.CATEGORY)

        if category is not None:
            for pname in ('name', 'lvl', 'path'):
                param = category.get(pname)
                if param is not None and param.value not in (None, ''):
                    kwargs.setdefault(pname, param.value)

        return cls(**kwargs)
