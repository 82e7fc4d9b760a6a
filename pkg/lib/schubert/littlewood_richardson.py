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
from functools import lru_cache
from typing import Iterable, Iterator

from lib.schubert.partition import Partition, partitions_in_box


def _sign(perm: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign

    return sign


@lru_cache(maxsize=None)
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """
    Number of semistandard fillings of nu/lam with content mu whose
    reverse reading word (rows top to bottom, each right to left) is a
    lattice word
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if nu.size != lam.size + mu.size or not nu.contains(lam):
        return 0
    if not mu:
        return 1

    cells = [(r, c) for r in range(len(nu)) for c in range(nu[r] - 1, lam.part(r + 1) - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    content = [0] * (len(mu) + 1)

    def place(index: int) -> int:
        if index == len(cells):
            return 1

        r, c = cells[index]
        upper = len(mu)
        if (r, c + 1) in filling:
            upper = min(upper, filling[r, c + 1])
        lower = filling[r - 1, c] + 1 if (r - 1, c) in filling else 1
        # Entries in row r of a lattice filling never exceed r + 1
        upper = min(upper, r + 1)

        total = 0
        for value in range(lower, upper + 1):
            if content[value] >= mu[value - 1]:
                continue
            if value > 1 and content[value] + 1 > content[value - 1]:
                continue

            filling[r, c] = value
            content[value] += 1
            total += place(index + 1)
            content[value] -= 1
            del filling[r, c]

        return total

    return place(0)


@lru_cache(maxsize=None)
def _box_product(lam: Partition, mu: Partition, rows: int, cols: int) -> tuple[tuple[Partition, int], ...]:
    size = lam.size + mu.size
    terms = []
    for nu in partitions_in_box(rows, cols):
        if nu.size != size or not nu.contains(lam) or not nu.contains(mu):
            continue
        coefficient = lr_coefficient(lam, mu, nu)
        if coefficient:
            terms.append((nu, coefficient))

    return tuple(terms)


def schur_multiply_in_box(lam: Iterable[int], mu: Iterable[int], rows: int, cols: int) -> dict[Partition, int]:
    """Product of two Schubert classes, keeping only partitions inside the box"""
    return dict(_box_product(Partition(lam), Partition(mu), rows, cols))


def horizontal_strips(nu: Partition, k: int) -> Iterator[Partition]:
    """Partitions obtained from nu by adding k boxes, no two in one column"""
    bounds = [None] + list(nu)
    length = len(nu) + 1

    def extend(row: int, remaining: int, built: tuple[int, ...]) -> Iterator[Partition]:
        if row == length:
            if remaining == 0:
                yield Partition(built)
            return

        base = nu.part(row + 1)
        ceiling = base + remaining if bounds[row] is None else min(bounds[row], base + remaining)
        for part in range(base, ceiling + 1):
            yield from extend(row + 1, remaining - (part - base), built + (part,))

    yield from extend(0, k, ())


def _supported_permutations(lam: Partition) -> Iterator[tuple[int, ...]]:
    """Permutations with lam_i - i + perm(i) >= 0 in every row, the only ones with a nonzero h-product"""
    n = len(lam)

    def extend(built: tuple[int, ...], free: frozenset[int]) -> Iterator[tuple[int, ...]]:
        row = len(built)
        if row == n:
            yield built
            return
        for value in sorted(free):
            if lam[row] - row + value >= 0:
                yield from extend(built + (value,), free - {value})

    yield from extend((), frozenset(range(n)))


def jacobi_trudi_product(lam: Iterable[int], mu: Iterable[int]) -> dict[Partition, int]:
    """
    s_lam * s_mu expanded through the determinant of complete symmetric
    functions, each factor applied to s_mu by the Pieri rule
    """
    lam, mu = Partition(lam), Partition(mu)
    n = len(lam)
    result: dict[Partition, int] = defaultdict(int)

    for perm in _supported_permutations(lam):
        degrees = [lam[i] - i + perm[i] for i in range(n)]

        current: dict[Partition, int] = {mu: 1}
        for k in degrees:
            following: dict[Partition, int] = defaultdict(int)
            for nu, coefficient in current.items():
                for rho in horizontal_strips(nu, k):
                    following[rho] += coefficient
            current = following

        sign = _sign(perm)
        for nu, coefficient in current.items():
            result[nu] += sign * coefficient

    return {nu: c for nu, c in result.items() if c}
