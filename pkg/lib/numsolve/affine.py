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

from lib.core.exceptions import PivotSingular, ShapeMismatch
from lib.core.logger import logger
from lib.core.settings import PIVOT_RTOL
from lib.core.structures import ChannelSet, ComplexMatrix, ProblemSpec, Strategy
from lib.utils.linalg import singular_values
from lib.utils.random import make_rng, random_unitary


@dataclass(frozen=True)
class AffineStrategyCoords:
    """
    Free blocks below the identity: U_i = [I; u_i] and conj(V_i) = [I; v_i]
    """

    u: tuple[ComplexMatrix, ...]
    v: tuple[ComplexMatrix, ...]

    @property
    def size(self) -> int:
        return sum(block.size for block in self.u + self.v)

    def flatten(self) -> np.ndarray:
        blocks = [block.ravel() for block in self.u + self.v]
        return np.concatenate(blocks) if blocks else np.zeros(0, dtype=np.complex128)

    @classmethod
    def unflatten(cls, spec: ProblemSpec, x: np.ndarray) -> AffineStrategyCoords:
        x = np.asarray(x, dtype=np.complex128)
        if x.shape != (spec.dimension(),):
            raise ShapeMismatch(f"Expected {spec.dimension()} coordinates, got {x.shape}")

        shapes = [(u.M - u.d, u.d) for u in spec.users] + [(u.N - u.d, u.d) for u in spec.users]
        blocks = []
        offset = 0
        for rows, cols in shapes:
            blocks.append(x[offset:offset + rows * cols].reshape(rows, cols))
            offset += rows * cols

        return cls(tuple(blocks[:spec.K]), tuple(blocks[spec.K:]))

    def conform(self, spec: ProblemSpec) -> None:
        if len(self.u) != spec.K or len(self.v) != spec.K:
            raise ShapeMismatch(f"Coordinates for {len(self.u)} users, spec has {spec.K}")

        for i, (user, u, v) in enumerate(zip(spec.users, self.u, self.v), 1):
            if u.shape != (user.M - user.d, user.d) or v.shape != (user.N - user.d, user.d):
                raise ShapeMismatch(f"Coordinate blocks of user {i} do not match {user}")


def _normalize(basis: ComplexMatrix, name: str) -> ComplexMatrix:
    d = basis.shape[1]
    lead = basis[:d]
    sigma = singular_values(lead)
    scale = singular_values(basis)
    if not sigma.size or sigma[-1] <= PIVOT_RTOL * scale[0]:
        raise PivotSingular(f"Leading block of {name} is singular")

    return np.linalg.solve(lead.T, basis[d:].T).T


def to_affine(strategy: Strategy) -> AffineStrategyCoords:
    u = tuple(_normalize(U, f"U_{i}") for i, U in enumerate(strategy.U, 1))
    v = tuple(_normalize(V.conj(), f"V_{i}") for i, V in enumerate(strategy.V, 1))
    return AffineStrategyCoords(u, v)


def extend(coords: AffineStrategyCoords) -> Strategy:
    def stack(block: ComplexMatrix) -> ComplexMatrix:
        return np.vstack([np.eye(block.shape[1], dtype=np.complex128), block])

    return Strategy(
        tuple(stack(u) for u in coords.u),
        tuple(stack(v).conj() for v in coords.v),
    )


@dataclass(frozen=True)
class AffineChart:
    channels: ChannelSet
    coords: AffineStrategyCoords
    rotated: bool


def affine_chart(ch: ChannelSet, strategy: Strategy, seed: Optional[int] = None) -> AffineChart:
    """
    Affine coordinates of a strategy, retrying once after a random unitary
    change of basis (H'_ij = P_i H_ij Q_j^H, U' = QU, V' = PV)
    """
    strategy.conform(ch.spec)
    try:
        return AffineChart(ch, to_affine(strategy), False)
    except PivotSingular:
        logger.debug("Leading block singular, rotating the ambient spaces")

    rng = make_rng(seed)
    Q = [random_unitary(rng, user.M) for user in ch.spec.users]
    P = [random_unitary(rng, user.N) for user in ch.spec.users]

    cross = {(i, j): P[i - 1] @ H @ Q[j - 1].conj().T for (i, j), H in ch.cross.items()}
    direct = None
    if ch.direct is not None:
        direct = {i: P[i - 1] @ H @ Q[i - 1].conj().T for i, H in ch.direct.items()}

    rotated = Strategy(
        tuple(q @ u for q, u in zip(Q, strategy.U)),
        tuple(p @ v for p, v in zip(P, strategy.V)),
        dict(strategy.meta),
    )
    return AffineChart(ChannelSet(ch.spec, cross, direct, ch.seed), to_affine(rotated), True)
