# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------

"""Minimal SVG charts: accuracy curves and 2-D scatter plots.

Documents are built as xml.etree elements and serialized with stable
attribute order, so that the same data gives the same bytes.
"""

__all__ = ['line_chart', 'scatter', 'write_svg', 'COLORS']

from io import open

from xml.etree.ElementTree import Element, SubElement, tostring

import numpy as np

SVG_NS = 'http://www.w3.org/2000/svg'  #: svg namespace.

MARGIN = 60  #: pixels around the plot area.

#: series / source colors, cycled.
COLORS = ('#1f77b4', '#d62728', '#2ca02c', '#ff7f0e', '#9467bd')


def _fmt(value):

    return '{0:.2f}'.format(value)


class _Scale(object):
    """Affine map from data bounds to pixel bounds."""

    __slots__ = ('low', 'high', 'start', 'stop')

    def __init__(self, values, start, stop):

        super(_Scale, self).__init__()

        values = np.asarray(values, dtype=np.float64)

        if values.size:
            low, high = float(np.min(values)), float(np.max(values))

        else:
            low, high = 0., 1.

        if not high > low:
            low, high = low - 0.5, high + 0.5

        self.low, self.high = low, high
        self.start, self.stop = start, stop

    def __call__(self, value):

        return self.start + (value - self.low) * (
            self.stop - self.start
        ) / (self.high - self.low)


def _document(width, height, title):

    result = Element(
        'svg', xmlns=SVG_NS, width=str(width), height=str(height),
        viewBox='0 0 {0} {1}'.format(width, height)
    )

    SubElement(
        result, 'rect', x='0', y='0', width=str(width), height=str(height),
        fill='white'
    )

    if title:
        SubElement(
            result, 'text', x=_fmt(width / 2.), y=_fmt(MARGIN / 2.),
            **{'text-anchor': 'middle', 'font-size': '16'}
        ).text = title

    return result


def _frame(root, width, height):

    bottom, right = height - MARGIN, width - MARGIN

    for x1, y1, x2, y2 in (
            (MARGIN, bottom, right, bottom), (MARGIN, bottom, MARGIN, MARGIN)
    ):
        SubElement(
            root, 'line', x1=str(x1), y1=str(y1), x2=str(x2), y2=str(y2),
            stroke='black'
        )


def _text(root, x, y, text, anchor='middle'):

    SubElement(
        root, 'text', x=_fmt(x), y=_fmt(y),
        **{'text-anchor': anchor, 'font-size': '12'}
    ).text = text


def _legend(root, names, width):

    for index, name in enumerate(names):

        top = MARGIN + 20 * index

        SubElement(
            root, 'rect', x=str(width - MARGIN - 150), y=str(top - 10),
            width='12', height='12', fill=COLORS[index % len(COLORS)]
        )
        _text(root, width - MARGIN - 132, top, name, anchor='start')


def _tostring(root):

    return tostring(root, encoding='unicode') + '\n'


def line_chart(
        xs, series, title=None, xlabel='N', ylabel='accuracy', width=800,
        height=600
):
    """Draw one polyline per named series over shared abscissas.

    :param list xs: abscissas.
    :param series: ordered (name, ordinates) pairs or a dict.
    :return: svg document.
    :rtype: str
    :raises: ValueError on missing series or ordinate count mismatch.
    """

    series = list(series.items()) if isinstance(series, dict) else list(series)
    xs = list(xs)

    if not series:
        raise ValueError('No series to draw.')

    for name, ys in series:
        if len(ys) != len(xs):
            raise ValueError(
                'Series {0!r}: {1} values for {2} abscissas.'.format(
                    name, len(ys), len(xs)
                )
            )

    xscale = _Scale(xs, MARGIN, width - MARGIN)
    yscale = _Scale(
        [y for _, ys in series for y in ys], height - MARGIN, MARGIN
    )

    root = _document(width, height, title)
    _frame(root, width, height)

    for x in xs:
        _text(root, xscale(x), height - MARGIN + 16, str(x))

    for y in (yscale.low, yscale.high):
        _text(root, MARGIN - 6, yscale(y) + 4, '{0:.3f}'.format(y), 'end')

    _text(root, width / 2., height - 16, xlabel)
    _text(root, 16, height / 2., ylabel, anchor='start')

    for index, (name, ys) in enumerate(series):

        color = COLORS[index % len(COLORS)]

        coords = [(xscale(x), yscale(y)) for x, y in zip(xs, ys)]

        SubElement(
            root, 'polyline',
            points=' '.join(
                '{0},{1}'.format(_fmt(x), _fmt(y)) for x, y in coords
            ),
            fill='none', stroke=color, **{'stroke-width': '2'}
        )

        for x, y in coords:
            SubElement(
                root, 'circle', cx=_fmt(x), cy=_fmt(y), r='3', fill=color
            )

    _legend(root, [name for name, _ in series], width)

    return _tostring(root)


def scatter(points, tags, title=None, size=800):
    """Draw 2-D points colored by tag, with a legend.

    Tags are colored in order of first appearance.

    :param points: (n, 2) coordinates.
    :param list tags: n point tags.
    :param int size: square viewport side.
    :rtype: str
    """

    points = np.asarray(points, dtype=np.float64)

    if points.ndim != 2 or points.shape[1] != 2:
        raise ValueError('(n, 2) points expected, got {0}.'.format(
            points.shape
        ))

    if len(tags) != len(points):
        raise ValueError('{0} tags for {1} points.'.format(
            len(tags), len(points)
        ))

    names = []
    for tag in tags:
        if tag not in names:
            names.append(tag)

    colors = dict(
        (name, COLORS[index % len(COLORS)]) for index, name in enumerate(names)
    )

    xscale = _Scale(points[:, 0], MARGIN, size - MARGIN)
    yscale = _Scale(points[:, 1], size - MARGIN, MARGIN)

    root = _document(size, size, title)
    _frame(root, size, size)

    for (x, y), tag in zip(points, tags):
        SubElement(
            root, 'circle', cx=_fmt(xscale(x)), cy=_fmt(yscale(y)), r='2',
            fill=colors[tag], **{'fill-opacity': '0.6'}
        )

    _legend(root, names, size)

    return _tostring(root)


def write_svg(svg, path):
    """Write an svg document to path."""

    with open(path, 'w', encoding='utf-8', newline='\n') as handle:
        handle.write(svg)
