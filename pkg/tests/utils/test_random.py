# -*- coding: utf-8 -*-
#  This program is free software; you can redistribute it and/or modify
#  it under the terms of the GNU General Public License as published by
#  the Free Software Foundation; either version 2 of the License, or
#  (at your option) any later version.
#
#  This program is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#  GNU General Public License for more details.
#
#  You should have received a copy of the GNU General Public License
#  along with this program; if not, write to the Free Software
#  Foundation, Inc., 51 Franklin Street, Fifth Floor, Boston,
#  MA 02110-1301, USA.


from unittest import TestCase

import numpy as np

from lib.utils.random import complex_gaussian, make_rng, random_seed, random_unitary


class TestRandom(TestCase):
    def test_complex_gaussian(self):
        a = complex_gaussian(make_rng(11), 3, 2)
        b = complex_gaussian(make_rng(11), 3, 2)
        self.assertEqual(a.shape, (3, 2))
        np.testing.assert_array_equal(a, b, "Same seed gave different draws")

        rng = make_rng(12)
        real, imag = rng.standard_normal((3, 2)), rng.standard_normal((3, 2))
        np.testing.assert_allclose(complex_gaussian(make_rng(12), 3, 2), (real + 1j * imag) / np.sqrt(2))

    def test_random_unitary(self):
        Q = random_unitary(make_rng(13), 4)
        np.testing.assert_allclose(Q.conj().T @ Q, np.eye(4), atol=1e-12)

    def test_random_seed(self):
        self.assertEqual(random_seed(make_rng(0)), random_seed(make_rng(0)))
        self.assertGreaterEqual(random_seed(), 0)
