# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""Flat key=value configuration file driver.

One parameter per line, keys prefixed by their category::

    # comment
    run.seed=1
    cgan.lambda=0.5,2.0@0.8

Blank lines and lines starting with ``#`` are ignored. A key defined twice
takes its last value.
"""

__all__ = ['KVFileConfDriver']

from collections import OrderedDict

from io import open

from .base import FileConfDriver
from ...model.param import Parameter


class KVFileConfDriver(FileConfDriver):
    """Manage flat key=value resource configuration."""

    COMMENT = '#'  #: comment line prefix.
    ASSIGN = '='  #: key/value separator.
    KEY_SEP = '.'  #: category/parameter separator.

    def resource(self):

        return OrderedDict()

    def loads(self, text, rscpath='<string>'):
        """Parse a key=value text into a resource.

        :param str text: text to parse.
        :param str rscpath: resource name used in error messages.
        :rtype: OrderedDict
        :raises: ConfDriver.Error on malformed lines."""

        result = self.resource()

        for lineno, line in enumerate(text.splitlines(), 1):

            line = line.strip()

            if not line or line.startswith(KVFileConfDriver.COMMENT):
                continue

            key, sep, svalue = line.partition(KVFileConfDriver.ASSIGN)
            cname, dot, pname = key.strip().partition(KVFileConfDriver.KEY_SEP)

            if not sep or not dot or not cname or not pname.strip():
                raise self.Error(
                    '{0}:{1}: expected category.parameter=value, got {2!r}'
                    .format(rscpath, lineno, line)
                )

            result.setdefault(cname, OrderedDict())[pname.strip()] = \
                svalue.strip()

        return result

    def dumps(self, conf):
        """Serialize a configuration into key=value lines.

        :param Configuration conf: configuration to serialize.
        :rtype: str"""

        lines = []

        for category in conf.values():
            for param in category.values():
                svalue = param.svalue
                lines.append(
                    '{0}{1}{2}{3}{4}'.format(
                        category.name, KVFileConfDriver.KEY_SEP, param.name,
                        KVFileConfDriver.ASSIGN, '' if svalue is None else svalue
                    )
                )

        return ''.join('{0}\n'.format(line) for line in lines)

    def _pathresource(self, rscpath):

        with open(rscpath, 'r', encoding='utf-8') as handle:
            text = handle.read()

        return self.loads(text, rscpath=rscpath)

    def _cnames(self, resource):

        return list(resource)

    def _params(self, resource, cname):

        return list(
            Parameter(pname, svalue=svalue)
            for pname, svalue in resource[cname].items()
        )

    def _setconf(self, conf, resource, rscpath):

        with open(rscpath, 'w', encoding='utf-8', newline='\n') as handle:
            handle.write(self.dumps(conf))
