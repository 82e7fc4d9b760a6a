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
from hypothesis import given, settings, strategies as st

from lib.core.exceptions import RankDeficient
from lib.utils.linalg import (
    eig,
    kernel_basis,
    orthogonal_complement,
    orthonormal_basis,
    overlap_dimension,
    principal_angles,
    rank,
)
from lib.utils.random import complex_gaussian, make_rng


class TestLinalg(TestCase):
    def test_orthonormal_basis(self):
        np.testing.assert_allclose(orthonormal_basis(np.eye(3)), np.eye(3), atol=1e-12)
        np.testing.assert_allclose(orthonormal_basis(np.array([[2.0], [0.0]])), [[1.0], [0.0]], atol=1e-12)

        A = complex_gaussian(make_rng(1), 4, 2)
        Q = orthonormal_basis(A)
        self.assertLessEqual(np.max(np.abs(Q.conj().T @ Q - np.eye(2))), 1e-12)
        self.assertLessEqual(principal_angles(Q, A).max(), 1e-10)

    def test_orthonormal_basis_rank_deficient(self):
        with self.assertRaises(RankDeficient):
            orthonormal_basis(np.array([[1.0, 2.0], [2.0, 4.0]]))

    def test_kernel_basis(self):
        self.assertEqual(kernel_basis(np.eye(2)).shape, (2, 0))

        kernel = kernel_basis(np.array([[1.0, 0.0]]))
        self.assertEqual(kernel.shape, (2, 1))
        np.testing.assert_allclose(np.abs(kernel[:, 0]), [0.0, 1.0], atol=1e-12)

        A = complex_gaussian(make_rng(2), 4, 6)
        kernel = kernel_basis(A)
        self.assertEqual(kernel.shape, (6, 2))
        self.assertLessEqual(np.max(np.abs(A @ kernel)), 1e-9 * np.max(np.abs(A)))

    def test_orthogonal_complement(self):
        A = complex_gaussian(make_rng(3), 5, 2)
        complement = orthogonal_complement(A, 5)
        self.assertEqual(complement.shape, (5, 3))
        self.assertLessEqual(np.max(np.abs(complement.conj().T @ A)), 1e-10)
        self.assertEqual(orthogonal_complement(np.zeros((4, 0)), 4).shape, (4, 4))

    def test_eig(self):
        values, vectors = eig(np.diag([1.0, 2.0]))
        order = np.argsort(values.real)
        np.testing.assert_allclose(values[order], [1.0, 2.0])
        np.testing.assert_allclose(np.abs(vectors[:, order]), np.eye(2), atol=1e-12)

        values, _ = eig(np.array([[0.0, -1.0], [1.0, 0.0]]))
        np.testing.assert_allclose(sorted(values, key=lambda z: z.imag), [-1j, 1j], atol=1e-12)

        A = complex_gaussian(make_rng(4), 4, 4)
        values, vectors = eig(A)
        self.assertLessEqual(
            np.max(np.abs(A @ vectors - vectors * values)), 1e-9 * np.linalg.norm(A, 2)
        )

    def test_principal_angles(self):
        A = complex_gaussian(make_rng(5), 4, 2)
        B = complex_gaussian(make_rng(6), 4, 2)
        self.assertLessEqual(principal_angles(A, A).max(), 1e-10)
        self.assertAlmostEqual(principal_angles(np.array([[1.0], [0.0]]), np.array([[0.0], [1.0]]))[0], np.pi / 2)
        np.testing.assert_allclose(principal_angles(A, B), principal_angles(B, A), atol=1e-12)

    def test_overlap_dimension(self):
        e = np.eye(4)
        self.assertEqual(overlap_dimension(e[:, :2], e[:, 1:3]), 1)
        self.assertEqual(overlap_dimension(e[:, :2], e[:, 2:]), 0)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 2**32 - 1))
    def test_rank_nullity(self, rows, cols, seed):
        A = complex_gaussian(make_rng(seed), rows, cols)
        self.assertEqual(rank(A) + kernel_basis(A).shape[1], cols)
