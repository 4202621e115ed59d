# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""Typed views of configuration categories.

A view binds one category of a Configuration to a plain object whose
attributes are typed values. Subclasses declare the category name and the
table of fields:

.. code-block:: python

    class EvalOptions(ConfView):

        CATEGORY = 'eval'
        FIELDS = (
            ('exact', 'exact', BOOL, False, 'exact binomial test'),
        )
        __slots__ = tuple(field[0] for field in FIELDS)
"""

__all__ = ['ConfView']

from .model.cat import Category
from .model.param import Parameter


class ConfView(object):
    """Base typed view of a configuration category.

    FIELDS items are (attribute, key, ptype, default, doc)."""

    CATEGORY = None  #: category name.

    FIELDS = ()  #: field table.

    __slots__ = ()

    class Error(ValueError):
        """Handle invalid view values."""

    def __init__(self, **kwargs):

        super(ConfView, self).__init__()

        for name, _, ptype, default, _ in self.FIELDS:
            value = kwargs.pop(name, default)
            if ptype is float and isinstance(value, int) and \
                    not isinstance(value, bool):
                value = float(value)
            setattr(self, name, value)

        if kwargs:
            raise self.Error(
                'Unknown {0} parameters {1}.'.format(
                    self.CATEGORY, sorted(kwargs)
                )
            )

        self.normalize()
        self.validate()

    @classmethod
    def names(cls):
        """Attribute names in field order."""

        return [field[0] for field in cls.FIELDS]

    def normalize(self):
        """Convert attribute values to canonical types (tuples...)."""

    def validate(self):
        """Check values consistency.

        :raises: self.Error.
        """

    def copy(self, **kwargs):
        """Copy with some values changed."""

        values = dict((name, getattr(self, name)) for name in self.names())
        values.update(kwargs)

        return type(self)(**values)

    def category(self):
        """Get this category filled with self values.

        :rtype: Category
        """

        result = self.declare()

        for name, key, _, _, _ in self.FIELDS:
            result[key].value = getattr(self, name)

        return result

    @classmethod
    def declare(cls):
        """Get this category with default values.

        :rtype: Category
        """

        result = Category(cls.CATEGORY)

        for _, key, ptype, default, doc in cls.FIELDS:
            result += Parameter(key, value=default, ptype=ptype, doc=doc)

        return result

    @classmethod
    def fromcat(cls, category):
        """Get a view from a resolved category.

        :raises: Parameter.Error on unparsable values, cls.Error on unknown
            keys or invalid values.
        """

        keys = dict((field[1], field[0]) for field in cls.FIELDS)

        kwargs = {}

        for key, param in category.items():

            if key not in keys:
                raise cls.Error(
                    'Unknown key {0}.{1}.'.format(cls.CATEGORY, key)
                )

            kwargs[keys[key]] = param.value

        return cls(**kwargs)

    def __eq__(self, other):

        return type(other) is type(self) and all(
            getattr(self, name) == getattr(other, name)
            for name in self.names()
        )

    def __ne__(self, other):

        return not self.__eq__(other)

    __hash__ = None

    def __repr__(self):

        return '{0}({1})'.format(type(self).__name__, ', '.join(
            '{0}={1!r}'.format(name, getattr(self, name))
            for name in self.names()
        ))
