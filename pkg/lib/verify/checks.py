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

import numpy as np
import scipy.linalg

from lib.core.exceptions import BadK, MissingDirectChannels, ShapeMismatch
from lib.core.logger import logger
from lib.core.settings import RANK_RTOL, VERIFY_TOL
from lib.core.structures import ChannelSet, ComplexMatrix, Strategy
from lib.utils.linalg import overlap_dimension, principal_angles, rank
from lib.verify.report import VerificationReport


def _basis(A: ComplexMatrix) -> ComplexMatrix:
    if A.shape[1] == 0:
        return np.asarray(A)

    return scipy.linalg.orth(A, rcond=RANK_RTOL)


def check_direct_rank(ch: ChannelSet, strategy: Strategy, tol: float = VERIFY_TOL) -> tuple[bool, ...]:
    if ch.direct is None:
        raise MissingDirectChannels("The channel set carries no direct channels")
    strategy.conform(ch.spec)

    results = []
    for i, user in enumerate(ch.spec.users, 1):
        H = ch.H(i, i)
        scale = np.linalg.norm(H, 2) if H.size else 0.0
        projected = _basis(strategy.V[i - 1]).conj().T @ H @ _basis(strategy.U[i - 1])
        sigma = scipy.linalg.svdvals(projected) if projected.size else np.zeros(0)
        results.append(scale > 0 and int(np.sum(sigma > tol * scale)) == user.d)

    return tuple(results)


def check_orthogonality(ch: ChannelSet, strategy: Strategy, tol: float = VERIFY_TOL) -> VerificationReport:
    strategy.conform(ch.spec)

    dims_ok = all(
        rank(u) == user.d and rank(v) == user.d
        for user, u, v in zip(ch.spec.users, strategy.U, strategy.V)
    )
    U = [_basis(u) for u in strategy.U]
    V = [_basis(v) for v in strategy.V]

    residuals = {}
    for i, j in ch.spec.pairs():
        product = V[i - 1].conj().T @ ch.H(i, j) @ U[j - 1]
        residuals[i, j] = float(np.max(np.abs(product))) if product.size else 0.0

    direct = check_direct_rank(ch, strategy, tol) if ch.direct is not None else None
    report = VerificationReport(
        max_orthogonality_residual=max(residuals.values(), default=0.0),
        residuals=residuals,
        direct_rank_ok=direct,
        dims_ok=dims_ok,
        tol=tol,
    )

    logger.debug(f"Verification: residual {report.max_orthogonality_residual:.3e}, passed={report.passed}")
    return report


def interference_overlap(ch: ChannelSet, strategy: Strategy, receiver: int) -> int:
    if ch.K != 3:
        raise BadK(f"Interference overlap is defined for 3 users, got {ch.K}")
    if receiver not in (1, 2, 3):
        raise ShapeMismatch(f"No receiver {receiver} among 3 users")

    j, k = (user for user in (1, 2, 3) if user != receiver)
    return overlap_dimension(
        ch.H(receiver, j) @ strategy.U[j - 1],
        ch.H(receiver, k) @ strategy.U[k - 1],
    )


def alignment_overlaps(ch: ChannelSet, strategy: Strategy) -> tuple[int, ...]:
    return tuple(interference_overlap(ch, strategy, i) for i in (1, 2, 3))


def subspace_distance(A: ComplexMatrix, B: ComplexMatrix) -> float:
    if A.shape != B.shape:
        raise ShapeMismatch(f"Cannot compare subspaces of shapes {A.shape} and {B.shape}")

    angles = principal_angles(A, B)
    return float(angles.max()) if angles.size else 0.0


def strategy_distance(a: Strategy, b: Strategy) -> float:
    if a.K != b.K:
        raise ShapeMismatch(f"Strategies have {a.K} and {b.K} users")

    pairs = list(zip(a.U, b.U)) + list(zip(a.V, b.V))
    return max((subspace_distance(x, y) for x, y in pairs), default=0.0)
