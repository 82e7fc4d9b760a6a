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

from typing import Iterable

import numpy as np

from lib.core.exceptions import InvalidParameter, TooManyUsers
from lib.core.logger import logger
from lib.core.settings import MAX_SUBSET_USERS, SUBSET_CHUNK_BITS
from lib.core.structures import ProblemSpec
from lib.feasibility.verdict import FeasibilityVerdict, Status, passed, violated


def own_dimensions(spec: ProblemSpec) -> np.ndarray:
    """d_i(N_i - d_i) + d_i(M_i - d_i) for every user"""
    return np.array([u.d * (u.N - u.d) + u.d * (u.M - u.d) for u in spec.users], dtype=np.int64)


def t_subset(spec: ProblemSpec, A: Iterable[int]) -> int:
    subset = set(A)
    if not subset <= set(range(1, spec.K + 1)):
        raise InvalidParameter(f"Subset {sorted(subset)} is not within users 1..{spec.K}")

    own = own_dimensions(spec)
    total = sum(int(own[i - 1]) for i in subset)
    streams = sum(spec.user(i).d for i in subset)
    squares = sum(spec.user(i).d ** 2 for i in subset)
    # Ordered pairs i != j both counted
    return total - (streams * streams - squares)


def _masks_to_subset(mask: int, K: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(K) if mask >> i & 1)


def check_counting(spec: ProblemSpec) -> FeasibilityVerdict:
    K = spec.K
    if K > MAX_SUBSET_USERS:
        raise TooManyUsers(f"Subset enumeration is capped at {MAX_SUBSET_USERS} users, got {K}")

    own = own_dimensions(spec)
    d = np.array(spec.d, dtype=np.int64)
    bits = np.arange(K, dtype=np.int64)
    chunk = 1 << SUBSET_CHUNK_BITS

    for start in range(1, 1 << K, chunk):
        masks = np.arange(start, min(start + chunk, 1 << K), dtype=np.int64)
        members = (masks[:, None] >> bits) & 1
        streams = members @ d
        t = members @ own - (streams * streams - members @ (d * d))
        negative = np.flatnonzero(t < 0)

        if negative.size:
            mask = int(masks[negative[0]])
            subset = _masks_to_subset(mask, K)
            logger.info(f"Counting bound violated for {spec} by subset {subset}: t={t[negative[0]]}")
            return FeasibilityVerdict(
                Status.INFEASIBLE,
                dimension=t_subset(spec, range(1, K + 1)),
                certificates=(violated("counting", subset, int(t[negative[0]])),),
            )

    dimension = t_subset(spec, range(1, K + 1))
    return FeasibilityVerdict(
        Status.NECESSARY_PASS,
        dimension=dimension,
        certificates=(passed("counting", tuple(range(1, K + 1)), dimension),),
    )
