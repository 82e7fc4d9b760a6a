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
from typing import Any, Mapping, Optional


@dataclass(frozen=True)
class VerificationReport:
    max_orthogonality_residual: float
    residuals: Mapping[tuple[int, int], float]
    direct_rank_ok: Optional[tuple[bool, ...]]
    dims_ok: bool
    tol: float

    @property
    def passed(self) -> bool:
        direct = self.direct_rank_ok is None or all(self.direct_rank_ok)
        return self.max_orthogonality_residual <= self.tol and self.dims_ok and direct

    def worst_pair(self) -> Optional[tuple[int, int]]:
        if not self.residuals:
            return None

        return max(self.residuals, key=self.residuals.get)

    def to_dict(self) -> dict[str, Any]:
        worst = self.worst_pair()
        return {
            "passed": self.passed,
            "tol": self.tol,
            "max_orthogonality_residual": self.max_orthogonality_residual,
            "residuals": {f"{i},{j}": value for (i, j), value in sorted(self.residuals.items())},
            "direct_rank_ok": list(self.direct_rank_ok) if self.direct_rank_ok is not None else None,
            "dims_ok": self.dims_ok,
            "worst_pair": f"{worst[0]},{worst[1]}" if worst else None,
        }
