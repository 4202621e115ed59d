# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""Module of configuration drivers.

A configuration driver resolves a configuration path to resource paths and
reads/writes configurations from/to those resources.

In order to implement your own driver, implement those methods:

- rscpaths(path): get resource paths from one configuration path.
- resource(): get a new empty resource.
- _pathresource(rscpath): read one resource.
- _cnames(resource): category names of a resource.
- _params(resource, cname): parameters of a resource category.
- _setconf(conf, resource, rscpath): write a configuration.
"""

__all__ = ['ConfDriver']

from traceback import format_exc

from six import reraise

from ..model.conf import Configuration
from ..model.cat import Category


class ConfDriver(object):
    """Driver dedicated to get/set configuration from relative paths."""

    class Error(Exception):
        """Handle conf driver errors."""

    def rscpaths(self, path):
        """Get resource paths related to input configuration path.

        :param str path: configuration path.
        :rtype: list
        """

        raise NotImplementedError()

    def resource(self):
        """Get a default and empty resource."""

        raise NotImplementedError()

    def pathresource(self, rscpath, logger=None, error=True):
        """Read the specific resource of a resource path.

        :param str rscpath: resource path.
        :param Logger logger: logger to use.
        :param bool error: raise a ConfDriver.Error if True (default).
            Otherwise, return None.
        """

        result = None

        try:
            result = self._pathresource(rscpath=rscpath)

        except Exception as ex:
            msg = 'Error while getting resource from {0}: {1}'.format(
                rscpath, ex
            )
            if logger is not None:
                logger.error('{0}\n{1}'.format(msg, format_exc()))
            if error:
                reraise(self.Error, self.Error(msg))

        return result

    def getconf(self, path, conf=None, logger=None, error=True):
        """Read a configuration path.

        Parameters found in resources take ptype and doc from homonymous
        parameters of input conf.

        :param str path: conf path from where get parameters.
        :param Configuration conf: declared configuration used to type the
            read parameters.
        :param Logger logger: logger used to trace information/error.
        :param bool error: raise ConfDriver.Error on unreadable resources.
        :return: read configuration, None if no resource exists.
        :rtype: Configuration
        """

        result = None

        for rscpath in self.rscpaths(path=path):

            if logger is not None:
                logger.debug('Read configuration {0}.'.format(rscpath))

            pathconf = self._getconf(
                rscpath=rscpath, logger=logger, conf=conf, error=error
            )

            if pathconf is not None:

                if result is None:
                    result = pathconf

                else:
                    result.update(pathconf)

        return result

    def setconf(self, conf, rscpath, logger=None):
        """Write input conf to input resource path.

        :param Configuration conf: conf to write.
        :param str rscpath: specific resource path to use.
        :param Logger logger: used to log info/errors.
        :raises: ConfDriver.Error in case of error.
        """

        resource = self.resource()

        try:
            self._setconf(conf=conf, resource=resource, rscpath=rscpath)

        except Exception as ex:
            msg = 'Error while setting conf to {0}: {1}'.format(rscpath, ex)
            if logger is not None:
                logger.error('{0}\n{1}'.format(msg, format_exc()))
            reraise(self.Error, self.Error(msg))

    def _getconf(self, rscpath, logger=None, conf=None, error=True):
        """Get specific conf from one resource path."""

        result = None

        resource = self.pathresource(
            rscpath=rscpath, logger=logger, error=error
        )

        if resource is not None:

            result = Configuration()

            for cname in self._cnames(resource=resource):

                category = Category(name=cname, local=False)
                result += category

                for param in self._params(resource=resource, cname=cname):

                    param.local = False

                    if conf is not None and cname in conf and \
                            param.name in conf[cname]:
                        svalue = param.svalue
                        param = conf[cname][param.name].copy(local=False)
                        param.svalue = svalue

                    category += param

        return result

    def _setconf(self, conf, resource, rscpath):
        """Write input conf to input resource at rscpath."""

        raise NotImplementedError()

    def _pathresource(self, rscpath):
        """Read the resource at rscpath."""

        raise NotImplementedError()

    def _cnames(self, resource):
        """Get resource category names.

        :rtype: list
        """

        raise NotImplementedError()

    def _params(self, resource, cname):
        """Get list of category parameters.

        :rtype: list
        """

        raise NotImplementedError()
