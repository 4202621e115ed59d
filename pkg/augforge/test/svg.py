# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------

"""svg UTs."""

from unittest import main

from b3j0f.utils.ut import UTCase

from io import open

from os import remove

from tempfile import NamedTemporaryFile

from xml.etree.ElementTree import fromstring

from ..svg import line_chart, scatter, write_svg


class LineChartTest(UTCase):

    def setUp(self):

        self.svg = line_chart(
            [500, 1000, 2000],
            [
                ('fake as test', [0.7, 0.75, 0.8]),
                ('fake as train', [0.6, 0.62, 0.61])
            ],
            title='sweep'
        )

    def test_polylines(self):

        self.assertEqual(self.svg.count('<polyline'), 2)
        self.assertEqual(self.svg.count('<circle'), 6)

    def test_parsable(self):

        root = fromstring(self.svg)

        self.assertEqual(root.get('width'), '800')
        self.assertIn('fake as test', self.svg)
        self.assertIn('sweep', self.svg)

    def test_stable(self):

        self.assertEqual(
            self.svg,
            line_chart(
                [500, 1000, 2000],
                [
                    ('fake as test', [0.7, 0.75, 0.8]),
                    ('fake as train', [0.6, 0.62, 0.61])
                ],
                title='sweep'
            )
        )

    def test_flat(self):

        svg = line_chart([1], {'a': [0.5]})

        self.assertNotIn('nan', svg)
        self.assertEqual(svg.count('<polyline'), 1)

    def test_errors(self):

        self.assertRaises(ValueError, line_chart, [1, 2], [])
        self.assertRaises(ValueError, line_chart, [1, 2], [('a', [1.])])


class ScatterTest(UTCase):

    def test_scatter(self):

        svg = scatter(
            [[0., 0.], [1., 1.], [2., 0.5]], ['real', 'fake', 'real']
        )

        root = fromstring(svg)

        self.assertEqual(root.get('width'), '800')
        self.assertEqual(root.get('height'), '800')
        self.assertEqual(svg.count('<circle'), 3)
        self.assertLess(svg.index('>real<'), svg.index('>fake<'))

    def test_errors(self):

        self.assertRaises(ValueError, scatter, [[0., 0., 0.]], ['real'])
        self.assertRaises(ValueError, scatter, [[0., 0.]], ['real', 'fake'])

    def test_write(self):

        with NamedTemporaryFile(suffix='.svg', delete=False) as handle:
            path = handle.name

        try:
            svg = scatter([[0., 0.]], ['real'])
            write_svg(svg, path)

            with open(path, encoding='utf-8') as handle:
                self.assertEqual(handle.read(), svg)

        finally:
            remove(path)


if __name__ == '__main__':
    main()
