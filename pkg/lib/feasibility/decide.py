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

from typing import Optional

from lib.core.logger import logger
from lib.core.settings import MAX_SUBSET_USERS
from lib.core.structures import ProblemSpec
from lib.feasibility.bounds import check_all_path_bounds, check_all_triples, check_dimensions
from lib.feasibility.counting import check_counting, t_subset
from lib.feasibility.symmetric import (
    decide_3user_symmetric,
    decide_divisible,
    decide_fully_symmetric,
)
from lib.feasibility.verdict import FeasibilityVerdict, Status


def _complete(spec: ProblemSpec) -> Optional[FeasibilityVerdict]:
    if spec.symmetric_K3():
        user = spec.users[0]
        return decide_3user_symmetric(user.M, user.N, user.d)

    if spec.symmetric() and spec.K >= 3 and spec.M[0] == spec.N[0]:
        return decide_fully_symmetric(spec.K, spec.N[0], spec.d[0])

    divisible = decide_divisible(spec)
    if isinstance(divisible, FeasibilityVerdict):
        return divisible

    return None


def decide(spec: ProblemSpec, max_path_length: Optional[int] = None) -> FeasibilityVerdict:
    """
    Run every necessary condition that applies, then the complete
    characterization for the problem's family if there is one
    """
    verdicts = [check_dimensions(spec)]
    if spec.K <= MAX_SUBSET_USERS:
        verdicts.append(check_counting(spec))
    else:
        logger.warning(f"Skipping the counting bound for K={spec.K}")

    verdicts.append(check_all_triples(spec))
    if max_path_length:
        verdicts.append(check_all_path_bounds(spec, max_path_length))

    certificates = tuple(c for v in verdicts for c in v.certificates)
    dimension = t_subset(spec, range(1, spec.K + 1))

    complete = None
    if not any(v.infeasible for v in verdicts):
        complete = _complete(spec)
    if complete is not None:
        certificates += tuple(c for c in complete.certificates if c not in certificates)
        status = complete.status
    elif any(v.infeasible for v in verdicts):
        status = Status.INFEASIBLE
    else:
        status = Status.NECESSARY_PASS

    logger.info(f"Verdict for {spec}: {status.value}")
    return FeasibilityVerdict(status, dimension=dimension, certificates=certificates)
