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
from typing import Optional

import numpy as np

from lib.construct.alignment import antennas, cyc, path_kernel
from lib.core.exceptions import DegenerateKernel, InfeasibleInput, InvalidParameter
from lib.core.logger import logger
from lib.core.structures import ChannelSet, ComplexMatrix, Strategy
from lib.feasibility.symmetric import decide_3user_symmetric
from lib.utils.linalg import kernel_basis, orthogonal_complement, orthonormal_basis, rank
from lib.utils.random import complex_gaussian, make_rng


def path_parameter(M: int, N: int) -> int:
    """The r with rN < (r + 1)M and (r + 1)N >= (r + 2)M, for M < N"""
    if not 0 < M < N:
        raise InvalidParameter(f"Path parameter needs 0 < M < N, got M={M} N={N}")

    return max(0, -(-(2 * M - N) // (N - M)))


@dataclass(frozen=True)
class PathPlan:
    """How the d streams of every user split into alignment paths"""

    r: int
    kernel: int
    full: int
    short: int
    partial: int
    partial_length: int


def plan_paths(M: int, N: int, d: int) -> PathPlan:
    r = path_parameter(M, N)
    kernel = (r + 1) * M - r * N

    if d <= (r + 1) * kernel:
        full = d // (r + 1)
        rest = d - (r + 1) * full
        return PathPlan(r, kernel, full, 0, 1 if rest else 0, rest)

    rest = d - (r + 1) * kernel
    short = rest // r
    remainder = rest - r * short
    return PathPlan(r, kernel, kernel, short, 1 if remainder else 0, remainder)


def _generic_outside(
    space: ComplexMatrix, excluded: ComplexMatrix, count: int, rng: np.random.Generator
) -> ComplexMatrix:
    """`count` generic orthonormal vectors of span(space) orthogonal to span(excluded)"""
    if count == 0:
        return np.zeros((space.shape[0], 0), dtype=np.complex128)

    coordinates = space.conj().T @ excluded
    free = kernel_basis(coordinates.conj().T)
    if free.shape[1] < count:
        raise DegenerateKernel(
            f"Need {count} directions outside a {excluded.shape[1]}-dimensional subspace, "
            f"only {free.shape[1]} available"
        )

    mixing = complex_gaussian(rng, free.shape[1], count)
    return orthonormal_basis(space @ free @ mixing)


def _blocks(paths: ComplexMatrix, M: int, length: int) -> list[ComplexMatrix]:
    return [paths[m * M:(m + 1) * M] for m in range(length)]


def solve_paths(ch: ChannelSet, M: int, N: int, d: int, seed: Optional[int] = None) -> Strategy:
    spec_M, spec_N = antennas(ch)
    if (spec_M, spec_N) != (M, N):
        raise InvalidParameter(f"Channels have M={spec_M} N={spec_N}, asked for M={M} N={N}")
    if M >= N:
        raise InvalidParameter(f"Alignment paths need M < N, got M={M} N={N}")

    verdict = decide_3user_symmetric(M, N, d)
    if not verdict.feasible:
        raise InfeasibleInput(f"M={M} N={N} d={d} is infeasible: {verdict.violations[0].to_dict()}")

    plan = plan_paths(M, N, d)
    rng = make_rng(seed if seed is not None else ch.seed)
    logger.debug(f"Path plan for M={M} N={N} d={d}: {plan}")

    columns: dict[int, list[ComplexMatrix]] = {1: [], 2: [], 3: []}

    def collect(start: int, paths: ComplexMatrix, length: int) -> None:
        # Block m of a path from `start` is sent by user start + m + 1
        for m, block in enumerate(_blocks(paths, M, length)):
            columns[cyc(start + m + 1)].append(block)

    for start in (1, 2, 3):
        kernel = path_kernel(ch, start, plan.r)
        if kernel.shape[1] < plan.kernel:
            raise DegenerateKernel(
                f"Path kernel from user {start} has dimension {kernel.shape[1]}, expected {plan.kernel}"
            )

        W = kernel[:, :plan.full]
        collect(start, W, plan.r + 1)

        if plan.short == 0:
            w = _generic_outside(kernel, W, plan.partial, rng)
            collect(start, w, plan.partial_length)
            continue

        shorter = path_kernel(ch, start, plan.r - 1)
        projected = W[:plan.r * M]
        X = _generic_outside(shorter, projected, plan.short, rng)
        collect(start, X, plan.r)

        w = _generic_outside(shorter, np.hstack([projected, X]), plan.partial, rng)
        collect(start, w, plan.partial_length)

    U = []
    for j in (1, 2, 3):
        stacked = np.hstack(columns[j])
        if rank(stacked) != d:
            raise DegenerateKernel(f"Signal space of user {j} has dimension {rank(stacked)}, expected {d}")
        U.append(orthonormal_basis(stacked))

    V = []
    for j in (1, 2, 3):
        near, far = cyc(j + 1), cyc(j + 2)
        interference = np.hstack([ch.H(j, near) @ U[near - 1], ch.H(j, far) @ U[far - 1]])
        basis = orthogonal_complement(interference, N)
        if basis.shape[1] < d:
            raise DegenerateKernel(f"Receive space of user {j} has dimension {basis.shape[1]}, expected {d}")
        V.append(basis[:, :d])

    return Strategy(tuple(U), tuple(V), {"method": "paths", "r": plan.r})

