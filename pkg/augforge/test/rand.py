# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------

"""rand UTs."""

from unittest import main

from b3j0f.utils.ut import UTCase

from numpy.random import default_rng

from ..rand import substream, substream_seed, torng


class SubstreamTest(UTCase):

    def test_stable(self):

        self.assertEqual(
            substream_seed(1, 'cgan', 'generator'),
            substream_seed(1, 'cgan', 'generator')
        )
        self.assertEqual(
            substream(1, 'cgan').random(4).tolist(),
            substream(1, 'cgan').random(4).tolist()
        )

    def test_independent(self):

        seeds = set([
            substream_seed(1, 'cgan', 'generator'),
            substream_seed(1, 'cgan', 'discriminator'),
            substream_seed(2, 'cgan', 'generator'),
            substream_seed(1, 'generator', 'cgan')
        ])

        self.assertEqual(len(seeds), 4)

    def test_range(self):

        seed = substream_seed(0, 'sweep')

        self.assertGreaterEqual(seed, 0)
        self.assertLess(seed, 2 ** 64)


class ToRngTest(UTCase):

    def test_generator(self):

        rng = default_rng(0)

        self.assertIs(torng(rng), rng)

    def test_int(self):

        self.assertEqual(torng(3).random(), default_rng(3).random())


if __name__ == '__main__':
    main()
