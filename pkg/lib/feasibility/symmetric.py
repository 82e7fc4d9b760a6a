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

from typing import Union

from lib.core.exceptions import BadK, InvalidParameter
from lib.core.logger import logger
from lib.core.structures import ProblemSpec
from lib.feasibility.counting import check_counting
from lib.feasibility.verdict import (
    FeasibilityVerdict,
    NotApplicable,
    Status,
    passed,
    violated,
)


def _positive(**values: int) -> None:
    for name, value in values.items():
        if value < 1:
            raise InvalidParameter(f"{name} must be a positive integer, got {value}")


def path_holds(M: int, N: int, d: int, r: int) -> bool:
    return (2 * r + 1) * d <= max(r * N, (r + 1) * M)


def path_slack(M: int, N: int, d: int, r: int) -> int:
    return max(r * N, (r + 1) * M) - (2 * r + 1) * d


def truncation(M: int, N: int, d: int) -> int:
    """
    Last r worth checking when N >= M and N > 2d; beyond it rN alone
    dominates (2r + 1)d
    """
    return -(-d // (N - 2 * d))


def first_violation(M: int, N: int, d: int) -> int:
    """Smallest violating r when N >= M, N <= 2d and M < 2d"""
    if d > M:
        return 0

    return (M - d) // (2 * d - M) + 1


def decide_3user_symmetric(M: int, N: int, d: int) -> FeasibilityVerdict:
    _positive(M=M, N=N, d=d)
    dimension = 3 * d * (M + N - 4 * d)
    if M > N:
        M, N = N, M

    if N > 2 * d:
        last = truncation(M, N, d)
    elif N == 2 * d and M == 2 * d:
        last = 1
    else:
        last = first_violation(M, N, d)

    for r in range(last + 1):
        if not path_holds(M, N, d, r):
            logger.info(f"Three-user symmetric M={M} N={N} d={d} fails at r={r}")
            return FeasibilityVerdict(
                Status.INFEASIBLE,
                dimension=dimension,
                certificates=(violated("three-user-symmetric", r, path_slack(M, N, d, r)),),
            )

    return FeasibilityVerdict(
        Status.FEASIBLE,
        dimension=dimension,
        certificates=(passed("three-user-symmetric", last),),
    )


def decide_fully_symmetric(K: int, N: int, d: int) -> FeasibilityVerdict:
    if K < 3:
        raise BadK(f"The fully symmetric characterization needs K >= 3, got {K}")
    _positive(N=N, d=d)

    slack = 2 * N - (K + 1) * d
    if slack < 0:
        return FeasibilityVerdict(
            Status.INFEASIBLE, certificates=(violated("fully-symmetric", K, slack),)
        )

    return FeasibilityVerdict(
        Status.FEASIBLE,
        dimension=K * d * slack,
        certificates=(passed("fully-symmetric", K, slack),),
    )


def decide_divisible(spec: ProblemSpec) -> Union[FeasibilityVerdict, NotApplicable]:
    if len(set(spec.d)) != 1:
        return NotApplicable("stream counts differ between users")

    d = spec.d[0]
    if any(value % d for value in spec.M + spec.N):
        return NotApplicable(f"antenna counts are not all divisible by d={d}")

    counting = check_counting(spec)
    if counting.infeasible:
        return counting

    return FeasibilityVerdict(
        Status.FEASIBLE,
        dimension=counting.dimension,
        certificates=counting.certificates + (passed("divisible", d),),
    )
