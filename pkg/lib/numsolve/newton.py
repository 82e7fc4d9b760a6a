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

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.linalg

from lib.core.decorators import timed
from lib.core.exceptions import NoConvergence
from lib.core.logger import logger
from lib.core.settings import (
    DEDUP_TOL,
    DEFAULT_ATTEMPTS,
    DEFAULT_RESTARTS,
    DEFAULT_THREADS,
    LM_FACTOR,
    LM_LAMBDA,
    LM_MAX_CONDITION,
    LM_MAX_ITERATIONS,
    LM_MAX_LAMBDA,
    NEWTON_TOL,
)
from lib.core.structures import ChannelSet, Strategy
from lib.numsolve.affine import AffineStrategyCoords, extend
from lib.utils.random import complex_gaussian, make_rng, random_seed


def _identity_extended(block: np.ndarray) -> np.ndarray:
    return np.vstack([np.eye(block.shape[1], dtype=np.complex128), block])


def residual(ch: ChannelSet, x: AffineStrategyCoords) -> np.ndarray:
    """Stacked [I; v_i]^T H_ij [I; u_j] over pairs (i, j), each block row-major"""
    x.conform(ch.spec)
    U = [_identity_extended(u) for u in x.u]
    V = [_identity_extended(v) for v in x.v]

    blocks = [(V[i - 1].T @ ch.H(i, j) @ U[j - 1]).ravel() for i, j in ch.spec.pairs()]
    return np.concatenate(blocks) if blocks else np.zeros(0, dtype=np.complex128)


def jacobian(ch: ChannelSet, x: AffineStrategyCoords) -> np.ndarray:
    """Complex Jacobian of `residual` with columns ordered as `x.flatten()`"""
    x.conform(ch.spec)
    spec = ch.spec
    U = [_identity_extended(u) for u in x.u]
    V = [_identity_extended(v) for v in x.v]

    offsets = []
    offset = 0
    for block in x.u + x.v:
        offsets.append(offset)
        offset += block.size

    rows = spec.equation_count()
    J = np.zeros((rows, offset), dtype=np.complex128)
    row = 0
    for i, j in spec.pairs():
        di, dj = spec.user(i).d, spec.user(j).d
        left = V[i - 1].T @ ch.H(i, j)
        right = ch.H(i, j) @ U[j - 1]

        # d/du_j[a, b] fills column b of the block with column d_j + a of left
        u_rows = x.u[j - 1].shape[0]
        for a in range(u_rows):
            for b in range(dj):
                column = offsets[j - 1] + a * dj + b
                J[row + np.arange(di) * dj + b, column] = left[:, dj + a]

        # d/dv_i[a, b] fills row b of the block with row d_i + a of right
        v_rows = x.v[i - 1].shape[0]
        for a in range(v_rows):
            for b in range(di):
                column = offsets[spec.K + i - 1] + a * di + b
                J[row + b * dj + np.arange(dj), column] = right[di + a, :]

        row += di * dj

    return J


def _split(J: np.ndarray) -> np.ndarray:
    return np.block([[J.real, -J.imag], [J.imag, J.real]])


@dataclass(frozen=True)
class NewtonRun:
    coords: AffineStrategyCoords
    residual: float
    iterations: int
    converged: bool


def _damped_step(JtJ: np.ndarray, g: np.ndarray, damping: float) -> Optional[np.ndarray]:
    """Solve (JtJ + damping I) step = -g by Cholesky, None if not safely positive definite"""
    try:
        cholesky = scipy.linalg.cho_factor(JtJ + damping * np.eye(JtJ.shape[0]), check_finite=False)
    except (scipy.linalg.LinAlgError, ValueError):
        return None

    diagonal = np.abs(np.diag(cholesky[0]))
    if not np.all(np.isfinite(diagonal)) or diagonal.min() == 0.0:
        return None
    condition = float((diagonal.max() / diagonal.min()) ** 2)
    if condition > LM_MAX_CONDITION:
        logger.debug(f"Ill-conditioned LM step: cond ~ {condition:.1e} at damping {damping:.1e}")
        return None

    return scipy.linalg.cho_solve(cholesky, -g, check_finite=False)


def levenberg_marquardt(
    ch: ChannelSet,
    start: AffineStrategyCoords,
    tol: float,
    max_iterations: int = LM_MAX_ITERATIONS,
    damping: float = LM_LAMBDA,
    factor: float = LM_FACTOR,
) -> NewtonRun:
    spec = ch.spec
    x = start.flatten()
    n = x.size

    def evaluate(z: np.ndarray) -> np.ndarray:
        return residual(ch, AffineStrategyCoords.unflatten(spec, z))

    r = evaluate(x)
    cost = float(np.vdot(r, r).real)
    iterations = 0

    while iterations < max_iterations:
        if not r.size or np.max(np.abs(r)) <= tol:
            break
        iterations += 1

        J = _split(jacobian(ch, AffineStrategyCoords.unflatten(spec, x)))
        g = J.T @ np.concatenate([r.real, r.imag])
        JtJ = J.T @ J

        while damping <= LM_MAX_LAMBDA:
            step = _damped_step(JtJ, g, damping)
            if step is None:
                damping *= factor
                continue

            candidate = x + step[:n] + 1j * step[n:]
            r_candidate = evaluate(candidate)
            cost_candidate = float(np.vdot(r_candidate, r_candidate).real)
            if cost_candidate < cost:
                x, r, cost = candidate, r_candidate, cost_candidate
                damping /= factor
                break

            damping *= factor
        else:
            break

    final = float(np.max(np.abs(r))) if r.size else 0.0
    return NewtonRun(AffineStrategyCoords.unflatten(spec, x), final, iterations, final <= tol)


def _tolerance(ch: ChannelSet, tol: float) -> float:
    return tol * (1 + ch.max_abs())


def _start(ch: ChannelSet, seed: int, attempt: int) -> AffineStrategyCoords:
    rng = make_rng([seed, attempt])
    spec = ch.spec
    u = tuple(complex_gaussian(rng, user.M - user.d, user.d) for user in spec.users)
    v = tuple(complex_gaussian(rng, user.N - user.d, user.d) for user in spec.users)
    return AffineStrategyCoords(u, v)


def _hostable(ch: ChannelSet) -> None:
    for i, user in enumerate(ch.spec.users, 1):
        if user.d > min(user.M, user.N):
            raise NoConvergence(f"User {i} cannot carry {user.d} streams on {user.M}x{user.N} antennas")


@timed
def solve_newton(
    ch: ChannelSet,
    seed: Optional[int] = None,
    restarts: int = DEFAULT_RESTARTS,
    max_iters: int = LM_MAX_ITERATIONS,
    tol: float = NEWTON_TOL,
) -> Strategy:
    _hostable(ch)
    seed = seed if seed is not None else random_seed()
    threshold = _tolerance(ch, tol)
    total_iterations = 0

    for attempt in range(restarts):
        run = levenberg_marquardt(ch, _start(ch, seed, attempt), threshold, max_iters)
        total_iterations += run.iterations
        logger.debug(f"Restart {attempt}: residual {run.residual:.3e} after {run.iterations} iterations")

        if run.converged:
            strategy = extend(run.coords)
            strategy.meta.update(
                method="newton",
                seed=seed,
                restart=attempt,
                iterations=run.iterations,
                total_iterations=total_iterations,
                residual=run.residual,
            )
            return strategy

    raise NoConvergence(f"No solution after {restarts} restarts ({total_iterations} iterations)")


def _dedup(solutions: list[np.ndarray], tol: float) -> list[np.ndarray]:
    distinct: list[np.ndarray] = []
    for x in sorted(solutions, key=lambda z: tuple(np.column_stack([z.real, z.imag]).ravel())):
        scale = 1 + float(np.max(np.abs(x))) if x.size else 1.0
        if all(np.max(np.abs(x - y)) > tol * scale for y in distinct):
            distinct.append(x)

    return distinct


@timed
def find_distinct_solutions(
    ch: ChannelSet,
    attempts: int = DEFAULT_ATTEMPTS,
    seed: Optional[int] = None,
    threads: int = DEFAULT_THREADS,
    tol: float = NEWTON_TOL,
    dedup_tol: float = DEDUP_TOL,
) -> list[Strategy]:
    """
    Lower bound on the number of solutions: independent single starts,
    merged in a fixed order so the result does not depend on scheduling
    """
    _hostable(ch)
    seed = seed if seed is not None else random_seed()
    threshold = _tolerance(ch, tol)

    def attempt(index: int) -> NewtonRun:
        return levenberg_marquardt(ch, _start(ch, seed, index), threshold)

    with ThreadPoolExecutor(max_workers=max(1, threads)) as executor:
        runs = list(executor.map(attempt, range(attempts)))

    found = [run.coords.flatten() for run in runs if run.converged]
    distinct = _dedup(found, dedup_tol)
    logger.info(f"{len(found)}/{attempts} starts converged to {len(distinct)} distinct solutions")

    strategies = []
    for x in distinct:
        strategy = extend(AffineStrategyCoords.unflatten(ch.spec, x))
        strategy.meta.update(method="newton", seed=seed)
        strategies.append(strategy)

    return strategies
