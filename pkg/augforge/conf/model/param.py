# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""Parameter definition objects.

A parameter holds a serialized value (``svalue``, the text found in a
configuration file or on the command line) and a typed value obtained by
applying its ``ptype`` to the serialized one.
"""

__all__ = [
    'Parameter', 'PType', 'BOOL', 'Array', 'Schedule', 'SCHEDULE',
    'serialize'
]

from re import compile as re_compile

from six import string_types, reraise

from .base import ModelElement


class PType(object):
    """Embed a type in order to instantiate it from a serialized value."""

    __slots__ = ('ptype', )

    def __init__(self, ptype, *args, **kwargs):

        super(PType, self).__init__(*args, **kwargs)

        self.ptype = ptype

    def __instancecheck__(self, instance):

        return isinstance(instance, self.ptype)

    def __call__(self, svalue):
        """Instantiate a new value of this ptype from a serialized value.

        :param str svalue: serialized value.
        :raises: ValueError if svalue is not convertible."""

        try:
            return self.ptype(svalue)

        except TypeError as ex:
            raise ValueError(
                'Wrong value {0!r} for {1}: {2}'.format(svalue, self.ptype, ex)
            )

    def __eq__(self, other):

        return type(self) is type(other) and self.ptype == other.ptype

    def __hash__(self):

        return hash((type(self), self.ptype))

    def __repr__(self):

        return '{0}({1})'.format(type(self).__name__, self.ptype.__name__)


class _Bool(PType):
    """Parameter type dedicated to boolean values."""

    TRUE = ('true', 'True', '1', 'yes', 'on')  #: true serialized values.
    FALSE = ('false', 'False', '0', 'no', 'off', '')  #: false ones.

    def __init__(self, *args, **kwargs):

        super(_Bool, self).__init__(ptype=bool, *args, **kwargs)

    def __call__(self, svalue):

        if isinstance(svalue, bool):
            return svalue

        svalue = svalue.strip()

        if svalue in _Bool.TRUE:
            return True

        if svalue in _Bool.FALSE:
            return False

        raise ValueError('Wrong boolean value {0!r}'.format(svalue))


BOOL = _Bool()


class Array(PType):
    """Parameter type dedicated to comma separated values.

    For example, ``Array(int)`` converts the entry "2,3,4" to (2, 3, 4)."""

    def __init__(self, ptype=str, *args, **kwargs):

        super(Array, self).__init__(ptype=ptype, *args, **kwargs)

    def __instancecheck__(self, instance):

        return isinstance(instance, (list, tuple)) and all(
            isinstance(item, self.ptype) for item in instance
        )

    def __call__(self, svalue):

        if isinstance(svalue, (list, tuple)):
            items = svalue

        else:
            items = [item for item in svalue.split(',') if item.strip()]

        result = []

        for item in items:
            if isinstance(item, string_types):
                item = item.strip()
            try:
                result.append(self.ptype(item))

            except (TypeError, ValueError):
                raise ValueError(
                    'Wrong item {0!r} in {1!r}, {2} expected.'.format(
                        item, svalue, self.ptype.__name__
                    )
                )

        return tuple(result)


class Schedule(PType):
    """Piecewise-constant schedule of values.

    The serialized form is a comma separated list of ``value[@at]`` where
    ``at`` is the position (iteration fraction or index) from which the
    value applies. The first item without position starts at 0.

    "0.5,2.0@0.8" becomes ((0.0, 0.5), (0.8, 2.0)).
    """

    SEP = '@'  #: value/position separator.

    def __init__(self, ptype=float, *args, **kwargs):

        super(Schedule, self).__init__(ptype=ptype, *args, **kwargs)

    def __instancecheck__(self, instance):

        return isinstance(instance, (list, tuple)) and all(
            isinstance(item, (list, tuple)) and len(item) == 2
            for item in instance
        )

    def __call__(self, svalue):

        if isinstance(svalue, (list, tuple)):
            items = [tuple(item) for item in svalue]

        else:
            items = []

            for index, token in enumerate(svalue.split(',')):
                token = token.strip()
                if not token:
                    continue

                if Schedule.SEP in token:
                    value, at = token.split(Schedule.SEP, 1)

                elif index == 0:
                    value, at = token, 0

                else:
                    raise ValueError(
                        'Missing position in schedule item {0!r}'.format(token)
                    )

                items.append((float(at), self.ptype(value)))

        if not items:
            raise ValueError('Empty schedule {0!r}'.format(svalue))

        for (prev, _), (at, _) in zip(items, items[1:]):
            if at <= prev:
                raise ValueError(
                    'Schedule positions must increase: {0!r}'.format(svalue)
                )

        return tuple(items)


SCHEDULE = Schedule()  #: default float schedule.


def _serializeitem(value):

    if isinstance(value, bool):
        return 'true' if value else 'false'

    if isinstance(value, float):
        return repr(value)

    return str(value)


def serialize(value):
    """Serialize a parameter value.

    Inverse of the ptypes above: sequences are comma separated, schedules
    use the ``value@at`` notation, floats keep their exact repr.

    :rtype: str
    """

    if value is None:
        return ''

    if isinstance(value, (list, tuple)):

        if value and all(
                isinstance(item, (list, tuple)) and len(item) == 2
                for item in value
        ):
            tokens = []
            for at, item in value:
                if at == 0 and not tokens:
                    tokens.append(_serializeitem(item))
                else:
                    tokens.append('{0}@{1}'.format(
                        _serializeitem(item), _serializeitem(at)
                    ))
            return ','.join(tokens)

        return ','.join(_serializeitem(item) for item in value)

    return _serializeitem(value)


class Parameter(ModelElement):
    """Parameter identified among a category by its name.

    Properties are:

    - name: parameter name.
    - value: typed value. Resolved lazily from svalue.
    - svalue: serialized value.
    - ptype: callable converting a svalue to a value (None keeps strings).
    - error: error encountered while resolving the svalue.
    - local: True if declared by the program rather than read from a
      resource.
    - doc: one line description, used by the command line help.
    """

    __slots__ = (
        '_name', 'ptype', '_svalue', '_value', '_error', 'local', 'doc'
    ) + ModelElement.__slots__

    class Error(ModelElement.Error):
        """Handle Parameter errors."""

    PARAM_NAME_REGEX = r'[a-zA-Z_]\w*'  #: name validation.
    #: name regex matcher.
    _PARAM_NAME_MATCHER = re_compile('{0}$'.format(PARAM_NAME_REGEX)).match

    DEFAULT_LOCAL = True  #: default local value.

    def __init__(
            self, name, value=None, ptype=None, svalue=None, error=None,
            local=DEFAULT_LOCAL, doc=None
    ):
        """
        :param str name: unique name by category.
        :param value: typed value.
        :param ptype: value type / svalue parser.
        :param str svalue: serialized value.
        :param Exception error: resolution error.
        :param bool local: declared by the program.
        :param str doc: parameter description.
        """

        super(Parameter, self).__init__()

        self._name = None
        self._value = None
        self._svalue = svalue
        self._error = error

        self.ptype = ptype
        self.local = local
        self.doc = doc

        self.name = name

        if value is not None:
            self.value = value

    def __eq__(self, other):
        """
        :return: True iif other is a parameter with the same name.
        :rtype: bool"""

        return isinstance(other, Parameter) and self.name == other.name

    def __hash__(self):

        return hash(self.name) + hash(Parameter)

    @property
    def error(self):
        """Get encountered error.

        :rtype: Exception"""

        return self._error

    @property
    def name(self):
        """Get parameter name.

        :rtype: str
        """

        return self._name

    @name.setter
    def name(self, value):

        if not isinstance(value, string_types) or \
                Parameter._PARAM_NAME_MATCHER(value) is None:
            raise Parameter.Error('Wrong parameter name {0!r}'.format(value))

        self._name = value

    @property
    def svalue(self):
        """Get serialized value, computed from the value if needed.

        :rtype: str
        """

        result = self._svalue

        if result is None and self._value is not None:
            result = self._svalue = serialize(self._value)

        return result

    @svalue.setter
    def svalue(self, value):
        """Change of serialized value. Nonify the cached value as well."""

        if value is not None:
            self._value = None
            self._error = None

        self._svalue = value

    @property
    def value(self):
        """Get parameter value, resolving the serialized value if needed.

        :raises: Parameter.Error if the svalue is not parsable.
        """

        result = self._value

        if result is None and self._svalue is not None:

            self._error = None

            try:
                if self.ptype is None:
                    result = self._svalue

                else:
                    result = self.ptype(self._svalue)

            except Exception as ex:
                self._error = ex
                msg = 'Wrong value {0!r} for parameter {1}: {2}'.format(
                    self._svalue, self.name, ex
                )
                reraise(Parameter.Error, Parameter.Error(msg))

            else:
                self._value = result

        return result

    @value.setter
    def value(self, value):
        """Change of parameter value.

        :raises: TypeError if input value is not an instance of self ptype.
        """

        if value is not None and isinstance(self.ptype, type) and \
                not isinstance(value, self.ptype):
            # int values are accepted where floats are expected
            if self.ptype is float and isinstance(value, int) and \
                    not isinstance(value, bool):
                value = float(value)

            else:
                error = TypeError(
                    'Wrong value type of {0} ({1!r}). {2} expected.'.format(
                        self.name, value, self.ptype.__name__
                    )
                )
                self._error = error
                raise error

        self._value = value
        self._svalue = None
        self._error = None

    def update(self, other, copy=True):
        """Update this parameter with other ptype, doc and value.

        A serialized value of other replaces this value, which is resolved
        again with the (possibly updated) ptype.

        :param Parameter other: parameter to update with.
        :return: self."""

        if other is not None:

            if not isinstance(other, Parameter):
                raise TypeError(
                    'Wrong element to update with {0}: {1}'.format(self, other)
                )

            if other.ptype is not None:
                self.ptype = other.ptype

            if other.doc is not None:
                self.doc = other.doc

            if other._value is not None:
                self._value = other._value
                self._svalue = other._svalue
                self._error = None

            elif other._svalue is not None:
                self.svalue = other._svalue

        return self
