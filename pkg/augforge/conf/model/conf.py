# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""Configuration definition objects."""

__all__ = ['Configuration', 'configuration']

from .base import CompositeModelElement
from .cat import Category


class Configuration(CompositeModelElement):
    """Manage conf such as a list of Categories.

    Parameters are addressed with dotted keys ``{category}.{parameter}``.
    """

    __contenttype__ = Category  #: content type.

    __slots__ = CompositeModelElement.__slots__

    KEY_SEP = '.'  #: category/parameter separator in keys.

    @classmethod
    def splitkey(cls, key):
        """Split a dotted key into (cname, pname).

        :raises: NameError if key has no category prefix."""

        cname, sep, pname = key.strip().partition(cls.KEY_SEP)

        if not sep or not cname or not pname:
            raise NameError(
                'Key {0!r} must be of the form category.parameter'.format(key)
            )

        return cname, pname

    def items_flat(self):
        """Iterate on (dotted key, parameter) in declaration order."""

        for cname, category in self.items():
            for pname, param in category.items():
                yield '{0}{1}{2}'.format(cname, self.KEY_SEP, pname), param


def configuration(*cats):
    """Quick instanciaton of Configuration with categories."""

    return Configuration(melts=cats)
