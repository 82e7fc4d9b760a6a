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
from typing import Any, Union

from lib.construct.paths import path_parameter
from lib.core.exceptions import InvalidParameter
from lib.feasibility.dof import best_subset_dof, max_dof_fully_symmetric
from lib.feasibility.symmetric import decide_3user_symmetric

INFINITE_PATH = "inf"


@dataclass(frozen=True)
class RegionCell:
    M: int
    N: int
    feasible: bool
    label: Union[int, str]

    def to_dict(self) -> dict[str, Any]:
        return {"M": self.M, "N": self.N, "feasible": self.feasible, "label": self.label}


def path_label(M: int, N: int) -> Union[int, str]:
    """Length of the longest alignment path, counted in links"""
    if M == N:
        return INFINITE_PATH

    return path_parameter(min(M, N), max(M, N)) + 1


def region_map(d: int, max_M: int, max_N: int) -> list[list[RegionCell]]:
    if d < 1 or max_M < 1 or max_N < 1:
        raise InvalidParameter("Region map bounds must be positive")

    rows = []
    for M in range(1, max_M + 1):
        row = []
        for N in range(1, max_N + 1):
            feasible = decide_3user_symmetric(M, N, d).feasible
            row.append(RegionCell(M, N, feasible, path_label(M, N)))
        rows.append(row)

    return rows


@dataclass(frozen=True)
class DofRow:
    N: int
    d: int
    total_dof: int
    normalized: str
    best_k: int
    best_d: int
    best_total: int
    regime: str

    def to_dict(self) -> dict[str, Any]:
        return dict(self.__dict__)


def saturation_point(K: int) -> int:
    """First N at which every one of the K users carries a stream"""
    return -(-(K + 1) // 2)


def dof_table(K: int, max_N: int) -> list[DofRow]:
    if max_N < 1:
        raise InvalidParameter(f"max_N must be positive, got {max_N}")

    rows = []
    for N in range(1, max_N + 1):
        symmetric = max_dof_fully_symmetric(K, N)
        best = best_subset_dof(K, N)
        rows.append(
            DofRow(
                N=N,
                d=symmetric.d,
                total_dof=symmetric.total_dof,
                normalized=str(symmetric.normalized),
                best_k=best.k,
                best_d=best.d,
                best_total=best.total,
                regime="alignment" if N <= saturation_point(K) else "mimo",
            )
        )

    return rows
