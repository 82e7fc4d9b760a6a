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

from itertools import combinations, islice
from typing import Optional, Sequence

import numpy as np

from lib.construct.alignment import antennas
from lib.core.decorators import timed
from lib.core.exceptions import (
    AsymmetricSpec,
    DefectiveB,
    InvalidParameter,
    SingularChannel,
)
from lib.core.logger import logger
from lib.core.settings import DISTINCT_ANGLE, RANK_RTOL
from lib.core.structures import ChannelSet, ComplexMatrix, Strategy
from lib.utils.linalg import eig, orthogonal_complement, orthonormal_basis, rank
from lib.verify.checks import strategy_distance


def _square_channels(ch: ChannelSet, d: int) -> tuple[ChannelSet, int]:
    M, N = antennas(ch)
    if M != N:
        raise AsymmetricSpec(f"Eigenvector construction needs M = N, got M={M} N={N}")
    if d < 1 or 2 * d > M:
        raise InvalidParameter(f"Need 1 <= d and 2d <= M, got d={d} M={M}")

    if M > 2 * d:
        logger.debug(f"Restricting {M} antennas to the leading {2 * d} coordinates")
        ch = ch.restrict(2 * d, 2 * d)

    for (i, j), H in ch.cross.items():
        if rank(H) < 2 * d:
            raise SingularChannel(f"H_{i},{j} is not invertible at tolerance")

    return ch, M


def cycle_matrix(ch: ChannelSet) -> ComplexMatrix:
    """B = H12 H32^-1 H31 H21^-1 H23 H13^-1; aligned receive spaces are B-invariant"""
    H = ch.H
    solve = np.linalg.solve
    # H23 H13^-1 as a transposed solve
    right = solve(H(1, 3).T, H(2, 3).T).T
    right = H(3, 1) @ solve(H(2, 1), right)
    return H(1, 2) @ solve(H(3, 2), right)


def eigenbasis(ch: ChannelSet) -> ComplexMatrix:
    values, vectors = eig(cycle_matrix(ch))
    order = np.lexsort((values.imag, values.real))
    vectors = vectors[:, order]

    if rank(vectors, RANK_RTOL) < vectors.shape[1]:
        raise DefectiveB("The cycle matrix lacks a full set of independent eigenvectors")

    return vectors


def _pad(A: ComplexMatrix, rows: int) -> ComplexMatrix:
    padded = np.zeros((rows, A.shape[1]), dtype=np.complex128)
    padded[:A.shape[0]] = A
    return padded


def _assemble(ch: ChannelSet, W: ComplexMatrix, d: int, full: int, selection: Sequence[int]) -> Strategy:
    H = ch.H
    solve = np.linalg.solve

    U3 = solve(H(1, 3), W)
    U2 = solve(H(1, 2), W)
    U1 = solve(H(2, 1), H(2, 3) @ U3)
    V1 = orthogonal_complement(W)
    V2 = orthogonal_complement(H(2, 3) @ U3)
    V3 = orthogonal_complement(H(3, 1) @ U1)

    U = [_pad(orthonormal_basis(u), full) for u in (U1, U2, U3)]
    V = [_pad(v[:, :d], full) for v in (V1, V2, V3)]
    return Strategy(tuple(U), tuple(V), {"method": "eigen", "selection": list(selection)})


def _check_selection(selection: Sequence[int], d: int) -> tuple[int, ...]:
    selection = tuple(int(s) for s in selection)
    if len(selection) != d or len(set(selection)) != d or not all(0 <= s < 2 * d for s in selection):
        raise InvalidParameter(f"Selection must be {d} distinct indices in 0..{2 * d - 1}, got {list(selection)}")

    return selection


def solve_square(ch: ChannelSet, d: int, selection: Sequence[int]) -> Strategy:
    selection = _check_selection(selection, d)
    square, full = _square_channels(ch, d)
    vectors = eigenbasis(square)

    return _assemble(square, vectors[:, list(selection)], d, full, selection)


@timed
def enumerate_square_solutions(ch: ChannelSet, d: int, limit: Optional[int] = None) -> list[Strategy]:
    square, full = _square_channels(ch, d)
    vectors = eigenbasis(square)

    solutions: list[Strategy] = []
    for selection in islice(combinations(range(2 * d), d), limit):
        strategy = _assemble(square, vectors[:, list(selection)], d, full, selection)
        if all(strategy_distance(strategy, other) > DISTINCT_ANGLE for other in solutions):
            solutions.append(strategy)

    logger.info(f"Eigenvector construction produced {len(solutions)} distinct strategies")
    return solutions
