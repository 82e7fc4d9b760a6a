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

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Any, Mapping, Optional, Sequence

from lib.core.decorators import timed
from lib.core.exceptions import DimensionMismatch, InvalidParameter, ResourceLimit
from lib.core.logger import logger
from lib.core.settings import DEFAULT_TERM_BUDGET, RELATION_ORDERS
from lib.schubert.littlewood_richardson import schur_multiply_in_box
from lib.schubert.partition import (
    GrassmannianShape,
    Partition,
    complement,
    conjugate,
)

Term = tuple[Partition, ...]


def incidence_class(d: int) -> list[tuple[Partition, Partition]]:
    """
    Class of the incidence relation between a transmit and a receive
    space: every lam in the d x d box paired with d^d - lam'
    """
    if d < 1:
        raise InvalidParameter(f"d must be positive, got {d}")

    return [(lam, complement(conjugate(lam), d, d)) for lam in GrassmannianShape(d, 2 * d).partitions()]


@dataclass
class ChowVector:
    """Sparse integer combination of Schubert class tuples, one partition per factor"""

    shapes: tuple[GrassmannianShape, ...]
    terms: dict[Term, int] = field(default_factory=dict)
    history: list[int] = field(default_factory=list)

    @classmethod
    def unit(cls, shapes: Sequence[GrassmannianShape]) -> ChowVector:
        shapes = tuple(shapes)
        return cls(shapes, {tuple(Partition() for _ in shapes): 1})

    def degree(self, term: Term, factor: int) -> int:
        return term[factor].size

    def coefficient(self, term: Sequence[Sequence[int]]) -> int:
        return self.terms.get(tuple(Partition(p) for p in term), 0)

    def top(self) -> Term:
        return tuple(shape.top_class() for shape in self.shapes)

    def multiply_relation(
        self,
        factors: tuple[int, int],
        classes: Sequence[tuple[Partition, Partition]],
        capacity: Optional[Mapping[int, int]] = None,
        budget: Optional[int] = None,
    ) -> ChowVector:
        """
        Multiply by sum_k classes[k][0] (x) classes[k][1] placed on the two
        factors. Terms whose deficit in some factor exceeds capacity[factor]
        can no longer reach the top class and are dropped
        """
        first, second = factors
        shape_a, shape_b = self.shapes[first], self.shapes[second]
        capacity = capacity or {}
        product: dict[Term, int] = defaultdict(int)

        for term, coefficient in self.terms.items():
            for lam, mu in classes:
                left = schur_multiply_in_box(term[first], lam, shape_a.rows, shape_a.cols)
                if not left:
                    continue
                right = schur_multiply_in_box(term[second], mu, shape_b.rows, shape_b.cols)

                for nu_a, c_a in left.items():
                    for nu_b, c_b in right.items():
                        new = list(term)
                        new[first], new[second] = nu_a, nu_b
                        product[tuple(new)] += coefficient * c_a * c_b

            if budget is not None and len(product) > budget:
                raise ResourceLimit(f"Term budget of {budget} exceeded")

        if capacity:
            tops = [shape.dimension for shape in self.shapes]
            product = {
                term: c
                for term, c in product.items()
                if all(tops[f] - self.degree(term, f) <= room for f, room in capacity.items())
            }

        result = ChowVector(self.shapes, dict(product), self.history + [len(product)])
        logger.debug(f"Relation on factors {factors}: {len(product)} terms")
        return result


def relation_order(K: int, order: str = "receiver") -> list[tuple[int, int]]:
    """Cross pairs (receiver, transmitter) in the order they get multiplied in"""
    pairs = [(i, j) for i in range(1, K + 1) for j in range(1, K + 1) if i != j]
    if order == "receiver":
        return pairs
    if order == "transmitter":
        return sorted(pairs, key=lambda p: (p[1], p[0]))
    if order == "cyclic":
        return sorted(pairs, key=lambda p: ((p[0] - p[1]) % K, p[0]))

    raise InvalidParameter(f"Unknown relation order {order!r}, expected one of {RELATION_ORDERS}")


def factorize(n: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1

    return factors


@dataclass(frozen=True)
class SolutionCount:
    K: int
    d: int
    N: int
    count: int
    factorization: dict[int, int]
    term_counts: tuple[int, ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "K": self.K,
            "d": self.d,
            "N": self.N,
            "count": self.count,
            "factorization": {str(p): e for p, e in self.factorization.items()},
            "term_counts": list(self.term_counts),
        }


@timed
def count_with_telemetry(
    K: int, d: int, N: int, budget: int = DEFAULT_TERM_BUDGET, order: str = "receiver"
) -> SolutionCount:
    if K < 2 or d < 1 or N < d:
        raise InvalidParameter(f"Need K >= 2 and 1 <= d <= N, got K={K} d={d} N={N}")
    if 2 * K * d * (N - d) != K * (K - 1) * d * d:
        raise DimensionMismatch(
            f"Strategy space has dimension {2 * K * d * (N - d)} but there are "
            f"{K * (K - 1) * d * d} equations; the solution set is not finite"
        )

    shape = GrassmannianShape(d, N)
    # Factors 0..K-1 hold U_1..U_K, factors K..2K-1 hold V_1..V_K
    vector = ChowVector.unit([shape] * (2 * K))
    classes = incidence_class(d)
    pairs = relation_order(K, order)

    remaining = defaultdict(int)
    for i, j in pairs:
        remaining[j - 1] += 1
        remaining[K + i - 1] += 1

    for i, j in pairs:
        factors = (j - 1, K + i - 1)
        for f in factors:
            remaining[f] -= 1
        capacity = {f: d * d * remaining[f] for f in range(2 * K)}
        vector = vector.multiply_relation(factors, classes, capacity, budget)

    count = vector.coefficient(vector.top())
    logger.info(f"K={K} d={d} N={N}: {count} solutions, peak {max(vector.history, default=0)} terms")
    return SolutionCount(K, d, N, count, factorize(count), tuple(vector.history))


def count_solutions(K: int, d: int, N: int, budget: int = DEFAULT_TERM_BUDGET, order: str = "receiver") -> int:
    return count_with_telemetry(K, d, N, budget, order).count
