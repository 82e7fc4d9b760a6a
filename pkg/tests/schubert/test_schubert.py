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


import os

from collections import defaultdict
from unittest import TestCase, skipUnless

from hypothesis import given, settings, strategies as st

from lib.core.exceptions import (
    BadK,
    DimensionMismatch,
    InfeasibleInput,
    InvalidParameter,
    ResourceLimit,
)
from lib.core.settings import RELATION_ORDERS, SLOW_TESTS_ENV
from lib.schubert.chow import count_solutions, count_with_telemetry, factorize, incidence_class
from lib.schubert.littlewood_richardson import (
    jacobi_trudi_product,
    lr_coefficient,
    schur_multiply_in_box,
)
from lib.schubert.partition import (
    GrassmannianShape,
    Partition,
    complement,
    conjugate,
    partitions_in_box,
)
from lib.schubert.witness import existence_witness

partitions = st.lists(st.integers(1, 3), max_size=3).map(lambda parts: Partition(sorted(parts, reverse=True)))

MAX_ORACLE_SIZE = 10


def partitions_of(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest)


BY_SIZE = {n: list(partitions_of(n)) for n in range(MAX_ORACLE_SIZE + 1)}


def pairs_up_to(size):
    for total in range(size + 1):
        for part in range(total + 1):
            for lam in BY_SIZE[part]:
                for mu in BY_SIZE[total - part]:
                    yield lam, mu


def box_product(left, right, shape):
    result = defaultdict(int)
    for lam, a in left.items():
        for mu, b in right.items():
            for nu, c in schur_multiply_in_box(lam, mu, shape.rows, shape.cols).items():
                result[nu] += a * b * c
    return {nu: c for nu, c in result.items() if c}


class TestPartition(TestCase):
    def test_conjugate(self):
        self.assertEqual(conjugate((5, 4, 1)), Partition((3, 2, 2, 2, 1)))
        self.assertEqual(conjugate(()), Partition())
        self.assertEqual(Partition((2, 1, 0)), Partition((2, 1)))

    def test_invalid(self):
        with self.assertRaises(ValueError):
            Partition((1, 2))
        with self.assertRaises(ValueError):
            Partition((2, -1))

    def test_box(self):
        self.assertEqual(
            partitions_in_box(2, 2),
            tuple(Partition(p) for p in ((), (1,), (2,), (1, 1), (2, 1), (2, 2))),
        )
        self.assertEqual(len(partitions_in_box(3, 3)), 20)

    def test_complement(self):
        self.assertEqual(complement((1,), 2, 2), Partition((2, 1)))
        self.assertEqual(complement((), 2, 3), Partition((3, 3)))
        with self.assertRaises(ValueError):
            complement((3,), 2, 2)

    def test_shape(self):
        shape = GrassmannianShape(2, 5)
        self.assertEqual((shape.rows, shape.cols, shape.dimension), (2, 3, 6))
        self.assertEqual(shape.top_class(), Partition((3, 3)))

    @given(partitions)
    def test_conjugate_involution(self, lam):
        self.assertEqual(conjugate(conjugate(lam)), lam)


class TestLittlewoodRichardson(TestCase):
    def test_box_products(self):
        self.assertEqual(schur_multiply_in_box((1,), (1,), 1, 2), {Partition((2,)): 1})
        self.assertEqual(schur_multiply_in_box((2, 1), (1,), 2, 2), {Partition((2, 2)): 1})
        self.assertEqual(schur_multiply_in_box((2, 2), (1,), 2, 2), {})

    def test_coefficient(self):
        self.assertEqual(lr_coefficient(Partition((2, 1)), Partition((2, 1)), Partition((3, 2, 1))), 2)
        self.assertEqual(lr_coefficient(Partition((1,)), Partition((1,)), Partition((1, 1))), 1)
        self.assertEqual(lr_coefficient(Partition((2,)), Partition((1,)), Partition((2, 2))), 0)

    def test_matches_jacobi_trudi(self):
        for lam, mu in pairs_up_to(MAX_ORACLE_SIZE):
            expected = jacobi_trudi_product(lam, mu)
            actual = {nu: lr_coefficient(lam, mu, nu) for nu in BY_SIZE[lam.size + mu.size]}
            self.assertEqual({nu: c for nu, c in actual.items() if c}, expected, f"{lam} * {mu}")

    def test_conjugation(self):
        for lam, mu in pairs_up_to(MAX_ORACLE_SIZE):
            for nu in BY_SIZE[lam.size + mu.size]:
                self.assertEqual(
                    lr_coefficient(lam, mu, nu),
                    lr_coefficient(conjugate(lam), conjugate(mu), conjugate(nu)),
                    f"{lam} * {mu} at {nu}",
                )

    def test_associative(self):
        for shape in (GrassmannianShape(2, 5), GrassmannianShape(3, 6)):
            classes = shape.partitions()
            for a in classes:
                for b in classes:
                    ab = schur_multiply_in_box(a, b, shape.rows, shape.cols)
                    for c in classes:
                        bc = schur_multiply_in_box(b, c, shape.rows, shape.cols)
                        self.assertEqual(
                            box_product(ab, {c: 1}, shape),
                            box_product({a: 1}, bc, shape),
                            f"{a} * {b} * {c} in {shape}",
                        )

    @settings(max_examples=60, deadline=None)
    @given(partitions, partitions)
    def test_commutative(self, lam, mu):
        self.assertEqual(schur_multiply_in_box(lam, mu, 4, 4), schur_multiply_in_box(mu, lam, 4, 4))


class TestSolutionCount(TestCase):
    def test_incidence_class(self):
        self.assertEqual(incidence_class(1), [(Partition(), Partition((1,))), (Partition((1,)), Partition())])

        pairs = incidence_class(2)
        self.assertEqual(len(pairs), 6)
        self.assertIn((Partition(), Partition((2, 2))), pairs)
        self.assertIn((Partition((2, 2)), Partition()), pairs)
        for lam, mu in pairs:
            self.assertEqual(lam.size + mu.size, 4)

    def test_small_counts(self):
        self.assertEqual(count_solutions(3, 1, 2), 2)
        self.assertEqual(count_solutions(3, 2, 4), 6)
        self.assertEqual(count_solutions(3, 3, 6), 20)

    def test_five_users(self):
        result = count_with_telemetry(5, 1, 3)
        self.assertEqual(result.count, 216)
        self.assertEqual(result.factorization, {2: 3, 3: 3})
        self.assertEqual(len(result.term_counts), 20)

    def test_orders_agree(self):
        for order in RELATION_ORDERS:
            self.assertEqual(count_solutions(3, 2, 4, order=order), 6, f"Order {order}")

    def test_errors(self):
        with self.assertRaises(DimensionMismatch):
            count_solutions(3, 1, 3)
        with self.assertRaises(ResourceLimit):
            count_solutions(3, 2, 4, budget=1)
        with self.assertRaises(InvalidParameter):
            count_solutions(3, 1, 2, order="random")

    def test_factorize(self):
        self.assertEqual(factorize(3700), {2: 2, 5: 2, 37: 1})
        self.assertEqual(factorize(1), {})

    @skipUnless(os.environ.get(SLOW_TESTS_ENV), "slow")
    def test_four_users(self):
        self.assertEqual(count_solutions(4, 2, 5), 3700)


class TestWitness(TestCase):
    def test_witnesses(self):
        for K, d, N in ((5, 1, 3), (4, 2, 5), (4, 1, 3), (3, 2, 4), (6, 3, 11), (7, 1, 4)):
            witness = existence_witness(K, d, N)
            self.assertEqual(len(witness.choices), K * (K - 1))
            self.assertEqual(len(witness.products), 2 * K)
            self.assertTrue(witness.to_dict()["verified"])

    def test_errors(self):
        with self.assertRaises(InfeasibleInput):
            existence_witness(5, 1, 2)
        with self.assertRaises(BadK):
            existence_witness(2, 1, 2)
