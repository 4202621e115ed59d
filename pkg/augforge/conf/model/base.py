# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""Base configuration model elements."""

__all__ = ['ModelElement', 'CompositeModelElement']

from collections import OrderedDict


class ModelElement(object):
    """Base configuration element.

    Elements are identified by a name and copied/updated slot by slot. A
    ``local`` element has been declared by the program (defaults), others
    come from configuration resources."""

    class Error(Exception):
        """Handle ModelElement errors."""

    __slots__ = ()

    def copy(self, *args, **kwargs):
        """Copy this model element and contained elements if they exist."""

        for slot in self.__slots__:
            attr = getattr(self, slot)
            if slot[0] == '_':  # protected attribute to constructor name
                slot = slot[1:]
            kwargs.setdefault(slot, attr)

        return type(self)(*args, **kwargs)

    def __eq__(self, other):

        result = isinstance(other, self.__class__)

        if result:
            for slot in self.__slots__:
                if getattr(self, slot) != getattr(other, slot):
                    result = False
                    break

        return result

    def __ne__(self, other):

        return not self.__eq__(other)

    __hash__ = object.__hash__

    def __repr__(self):

        slotsrepr = ', '.join(
            '{0}={1!r}'.format(slot.lstrip('_'), getattr(self, slot))
            for slot in self.__slots__
        )

        return '{0}[{1}]'.format(type(self).__name__, slotsrepr)

    def update(self, other, copy=True):
        """Update this element with not None slots of other.

        :param other: same type than this.
        :param bool copy: copy other before update attributes.
        :return: this.
        :raises: TypeError if other is not of this type."""

        if other is not None:

            if not isinstance(other, self.__class__):
                raise TypeError(
                    'Wrong element to update with {0}: {1}'.format(self, other)
                )

            if copy:
                other = other.copy()

            for slot in other.__slots__:
                attr = getattr(other, slot)
                if attr is not None:
                    setattr(self, slot, attr)

        return self


class CompositeModelElement(ModelElement, OrderedDict):
    """Model element composed of named model elements."""

    __contenttype__ = ModelElement  #: content type.

    __slots__ = ModelElement.__slots__

    def __init__(self, melts=None):
        """
        :param tuple melts: model elements to add.
        """

        super(CompositeModelElement, self).__init__()

        if melts is not None:
            for melt in melts:
                self[melt.name] = melt

    def __eq__(self, other):

        return ModelElement.__eq__(self, other) and OrderedDict.__eq__(
            self, other
        )

    __hash__ = object.__hash__

    def __getattr__(self, key):
        """Delegate missing attributes to contents by name."""

        try:
            return self[key]

        except KeyError:
            raise AttributeError(
                '{0!r} object has no attribute {1!r}'.format(
                    type(self).__name__, key
                )
            )

    def __iadd__(self, other):
        """Put model element(s) in this content.

        :raises: TypeError if other is not a content element."""

        for melt in self._melts(other):
            self[melt.name] = melt

        return self

    def _melts(self, other):
        """Get a list of checked content elements from other."""

        if isinstance(other, type(self)):
            result = list(other.values())

        elif isinstance(other, self.__contenttype__):
            result = [other]

        else:
            result = list(other)

        for melt in result:
            if not isinstance(melt, self.__contenttype__):
                raise TypeError('Wrong element {0}'.format(melt))

        return result

    def __repr__(self):

        return '{0}({1})'.format(
            ModelElement.__repr__(self), ', '.join(
                repr(melt) for melt in self.values()
            )
        )

    def copy(self, *args, **kwargs):

        kwargs.setdefault('melts', [melt.copy() for melt in self.values()])

        return super(CompositeModelElement, self).copy(*args, **kwargs)

    def update(self, other, copy=True):
        """Update this composite with other contents.

        Contents unknown to this are added (not local), known ones are
        updated.

        :param other: same type as this or this __contenttype__.
        :return: self"""

        if other is None:
            return self

        if isinstance(other, self.__class__):
            super(CompositeModelElement, self).update(other, copy=copy)
            contents = list(other.values())

        elif isinstance(other, self.__contenttype__):
            contents = [other]

        else:
            raise TypeError(
                'Wrong element to update with {0}: {1}'.format(self, other)
            )

        for content in contents:

            selfcontent = self.get(content.name)

            if selfcontent is None:
                if copy:
                    content = content.copy(local=False)
                self[content.name] = content

            else:
                selfcontent.update(content, copy=copy)

        return self
