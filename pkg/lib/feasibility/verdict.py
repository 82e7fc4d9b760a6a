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

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional


class Status(str, Enum):
    FEASIBLE = "Feasible"
    INFEASIBLE = "Infeasible"
    NECESSARY_PASS = "NecessaryConditionsPassOnly"


@dataclass(frozen=True)
class Certificate:
    """
    One evaluated condition. `witness` is a user subset, a triple, an
    index sequence or an integer r; `value` is the slack when one exists
    """

    condition: str
    witness: Any
    holds: bool
    value: Optional[int] = None

    def to_dict(self) -> dict[str, Any]:
        witness = list(self.witness) if isinstance(self.witness, tuple) else self.witness
        return {
            "condition": self.condition,
            "witness": witness,
            "holds": self.holds,
            "value": self.value,
        }


@dataclass(frozen=True)
class FeasibilityVerdict:
    status: Status
    dimension: Optional[int] = None
    certificates: tuple[Certificate, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "certificates", tuple(self.certificates))
        if self.status is Status.INFEASIBLE and not self.violations:
            raise ValueError("An infeasible verdict needs a violated certificate")

    @property
    def feasible(self) -> bool:
        return self.status is Status.FEASIBLE

    @property
    def infeasible(self) -> bool:
        return self.status is Status.INFEASIBLE

    @property
    def violations(self) -> tuple[Certificate, ...]:
        return tuple(c for c in self.certificates if not c.holds)

    def to_dict(self) -> dict[str, Any]:
        return {
            "status": self.status.value,
            "dimension": self.dimension,
            "certificates": [c.to_dict() for c in self.certificates],
        }


@dataclass(frozen=True)
class NotApplicable:
    reason: str

    def to_dict(self) -> dict[str, Any]:
        return {"status": "NotApplicable", "reason": self.reason}


def passed(condition: str, witness: Any = None, value: Optional[int] = None) -> Certificate:
    return Certificate(condition, witness, True, value)


def violated(condition: str, witness: Any, value: Optional[int] = None) -> Certificate:
    return Certificate(condition, witness, False, value)
