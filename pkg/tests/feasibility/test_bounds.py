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

from hypothesis import given, settings

from lib.core.exceptions import HypothesisViolated, InvalidParameter, TooManyUsers
from lib.core.structures import ProblemSpec
from lib.feasibility.bounds import (
    admissible,
    check_all_path_bounds,
    check_all_triples,
    check_dimensions,
    check_path_bound,
    check_triple,
)
from lib.feasibility.counting import check_counting, t_subset
from lib.feasibility.verdict import Status
from tests import specs


class TestCounting(TestCase):
    def test_t_subset(self):
        spec = ProblemSpec.from_symmetric(3, 2, 2, 1)
        self.assertEqual(t_subset(spec, {1, 2, 3}), 0)
        self.assertEqual(t_subset(spec, set()), 0)
        with self.assertRaises(InvalidParameter):
            t_subset(spec, {4})

    def test_full_subset_formula(self):
        for M, N, d in ((2, 2, 1), (3, 5, 2), (4, 8, 3), (6, 6, 2)):
            spec = ProblemSpec.from_symmetric(3, M, N, d)
            brute = sum(d * (M - d) + d * (N - d) for _ in range(3)) - sum(
                d * d for i, j in spec.pairs()
            )
            self.assertEqual(t_subset(spec, {1, 2, 3}), brute)
            self.assertEqual(brute, 3 * d * (M + N - 4 * d))

    def test_check_counting(self):
        verdict = check_counting(ProblemSpec.from_symmetric(3, 4, 4, 2))
        self.assertEqual(verdict.status, Status.NECESSARY_PASS)
        self.assertEqual(verdict.dimension, 0)

        verdict = check_counting(ProblemSpec.from_symmetric(3, 3, 4, 2))
        self.assertTrue(verdict.infeasible)
        self.assertEqual(verdict.violations[0].witness, (1, 2, 3))
        self.assertEqual(verdict.violations[0].value, -6)

        verdict = check_counting(ProblemSpec.from_symmetric(4, 5, 5, 2))
        self.assertFalse(verdict.infeasible)
        self.assertEqual(verdict.dimension, 0)

    def test_too_many_users(self):
        with self.assertRaises(TooManyUsers):
            check_counting(ProblemSpec.from_symmetric(25, 2, 2, 1))

    @settings(max_examples=40, deadline=None)
    @given(specs)
    def test_certificate_is_negative(self, spec):
        verdict = check_counting(spec)
        if verdict.infeasible:
            self.assertLess(t_subset(spec, verdict.violations[0].witness), 0)
        else:
            self.assertEqual(verdict.dimension, t_subset(spec, range(1, spec.K + 1)))


class TestBounds(TestCase):
    def test_check_dimensions(self):
        self.assertFalse(check_dimensions(ProblemSpec.from_symmetric(3, 2, 2, 1)).infeasible)
        verdict = check_dimensions(ProblemSpec.from_lists([2, 1], [2, 2], [1, 2]))
        self.assertTrue(verdict.infeasible)
        self.assertEqual(verdict.violations[0].witness, 2)

    def test_check_triple(self):
        self.assertTrue(check_triple(ProblemSpec.from_lists([1, 1, 1], [3, 3, 3], [1, 1, 1]), 1, 2, 3))
        self.assertFalse(check_triple(ProblemSpec.from_lists([2, 2, 2], [4, 4, 4], [2, 2, 2]), 1, 2, 3))
        self.assertTrue(check_triple(ProblemSpec.from_symmetric(3, 6, 6, 3), 2, 3, 1))
        with self.assertRaises(InvalidParameter):
            check_triple(ProblemSpec.from_symmetric(3, 2, 2, 1), 1, 1, 2)

    def test_check_all_triples(self):
        verdict = check_all_triples(ProblemSpec.from_symmetric(3, 4, 8, 3))
        self.assertTrue(verdict.infeasible)
        self.assertEqual(verdict.violations[0].witness, (1, 2, 3))
        self.assertFalse(check_all_triples(ProblemSpec.from_symmetric(4, 5, 5, 2)).infeasible)

    def test_admissible(self):
        self.assertTrue(admissible((1, 2, 3, 1)))
        self.assertFalse(admissible((1, 2, 1)))
        self.assertFalse(admissible((1, 1)))

    def test_check_path_bound(self):
        self.assertTrue(check_path_bound(ProblemSpec.from_symmetric(3, 1, 1, 1), (1, 2)))
        self.assertTrue(check_path_bound(ProblemSpec.from_symmetric(3, 3, 4, 2), (1, 2, 3)))
        self.assertFalse(check_path_bound(ProblemSpec.from_symmetric(3, 4, 8, 3), (1, 2, 3)))
        self.assertFalse(check_path_bound(ProblemSpec.from_symmetric(3, 3, 4, 2), (1, 2, 3, 1)))

    def test_check_path_bound_hypotheses(self):
        spec = ProblemSpec.from_symmetric(3, 2, 2, 1)
        with self.assertRaises(HypothesisViolated):
            check_path_bound(spec, (1,))
        with self.assertRaises(HypothesisViolated):
            check_path_bound(spec, (1, 2, 1))
        with self.assertRaises(HypothesisViolated):
            check_path_bound(spec, (1, 4))
        with self.assertRaises(HypothesisViolated):
            check_path_bound(ProblemSpec.from_lists([2, 3, 4], [5, 6, 7], [1, 1, 1]), (1, 2, 3))

    def test_check_all_path_bounds(self):
        verdict = check_all_path_bounds(ProblemSpec.from_symmetric(3, 3, 4, 2), 4)
        self.assertTrue(verdict.infeasible)
        self.assertEqual(verdict.violations[0].value, 2)

        self.assertFalse(check_all_path_bounds(ProblemSpec.from_symmetric(3, 3, 5, 2), 8).infeasible)
        with self.assertRaises(InvalidParameter):
            check_all_path_bounds(ProblemSpec.from_symmetric(3, 2, 2, 1), 1)
