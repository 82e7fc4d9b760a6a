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

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator


class Partition(tuple):
    """Weakly decreasing tuple of positive parts; () is the zero partition"""

    def __new__(cls, parts: Iterable[int] = ()) -> Partition:
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"Negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"Parts {parts} are not weakly decreasing")

        return super().__new__(cls, tuple(p for p in parts if p))

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, k: int) -> int:
        """k-th part, 1-based, zero past the end"""
        return self[k - 1] if k <= len(self) else 0

    def conjugate(self) -> Partition:
        return conjugate(self)

    def fits(self, rows: int, cols: int) -> bool:
        return len(self) <= rows and (not self or self[0] <= cols)

    def contains(self, other: Partition) -> bool:
        return len(other) <= len(self) and all(a >= b for a, b in zip(self, other))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


def rectangle(width: int, height: int) -> Partition:
    """width^height: `height` parts equal to `width`"""
    return Partition((width,) * height)


def conjugate(lam: Iterable[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return Partition()

    return Partition(sum(1 for part in lam if part > c) for c in range(lam[0]))


@dataclass(frozen=True)
class GrassmannianShape:
    """G(d, m): d-dimensional subspaces of an m-dimensional space"""

    d: int
    m: int

    def __post_init__(self) -> None:
        if not 1 <= self.d <= self.m:
            raise ValueError(f"Need 1 <= d <= m, got d={self.d} m={self.m}")

    @property
    def rows(self) -> int:
        return self.d

    @property
    def cols(self) -> int:
        return self.m - self.d

    @property
    def dimension(self) -> int:
        return self.d * (self.m - self.d)

    def top_class(self) -> Partition:
        return top_class(self)

    def partitions(self) -> tuple[Partition, ...]:
        return partitions_in_box(self.rows, self.cols)


@lru_cache(maxsize=None)
def partitions_in_box(rows: int, cols: int) -> tuple[Partition, ...]:
    """All partitions in a rows x cols box, ordered by size then reverse lexicographically"""

    def generate(remaining: int, bound: int) -> Iterator[tuple[int, ...]]:
        yield ()
        if remaining == 0:
            return
        for first in range(bound, 0, -1):
            for rest in generate(remaining - 1, first):
                yield (first,) + rest

    found = {Partition(p) for p in generate(rows, cols)}
    return tuple(sorted(found, key=lambda p: (p.size, tuple(-x for x in p))))


def complement(lam: Iterable[int], rows: int, cols: int) -> Partition:
    """Box complement: k-th part is cols - lam_{rows + 1 - k}"""
    lam = Partition(lam)
    if not lam.fits(rows, cols):
        raise ValueError(f"{tuple(lam)} does not fit a {rows}x{cols} box")

    return Partition(cols - lam.part(rows + 1 - k) for k in range(1, rows + 1))


def top_class(shape: GrassmannianShape) -> Partition:
    return rectangle(shape.cols, shape.rows)
