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
from fractions import Fraction
from typing import Any

from lib.core.exceptions import BadK, InvalidParameter


@dataclass(frozen=True)
class SymmetricDof:
    d: int
    total_dof: int
    normalized: Fraction

    def to_dict(self) -> dict[str, Any]:
        return {
            "d": self.d,
            "total_dof": self.total_dof,
            "normalized": str(self.normalized),
        }


@dataclass(frozen=True)
class SubsetDof:
    k: int
    d: int
    total: int

    def to_dict(self) -> dict[str, Any]:
        return {"k": self.k, "d": self.d, "total": self.total}


def max_dof_fully_symmetric(K: int, N: int) -> SymmetricDof:
    if K < 3:
        raise BadK(f"Fully symmetric dof needs K >= 3, got {K}")
    if N < 1:
        raise InvalidParameter(f"N must be positive, got {N}")

    d = 2 * N // (K + 1)
    return SymmetricDof(d, K * d, Fraction(K * d, N))


def streams_per_user(k: int, N: int) -> int:
    if k == 1:
        return N
    if k == 2:
        # Two users share N dimensions at every receiver without alignment
        return N // 2

    return 2 * N // (k + 1)


def best_subset_dof(K: int, N: int) -> SubsetDof:
    """
    Best number k of active users when every active user sends the same
    number of streams; ties go to the larger k
    """
    if K < 1:
        raise InvalidParameter(f"K must be positive, got {K}")
    if N < 1:
        raise InvalidParameter(f"N must be positive, got {N}")

    best = SubsetDof(1, N, N)
    for k in range(2, K + 1):
        d = streams_per_user(k, N)
        if k * d >= best.total:
            best = SubsetDof(k, d, k * d)

    return best
