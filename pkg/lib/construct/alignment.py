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

import numpy as np

from lib.core.exceptions import AsymmetricSpec, BadK, InvalidParameter
from lib.core.structures import ChannelSet, ComplexMatrix
from lib.utils.linalg import kernel_basis, rank


def cyc(i: int) -> int:
    """Three-user index arithmetic: residue 0 stands for user 3"""
    return (i - 1) % 3 + 1


def antennas(ch: ChannelSet) -> tuple[int, int]:
    if ch.K != 3:
        raise BadK(f"Exact constructions need exactly 3 users, got {ch.K}")
    if len(set(ch.spec.M)) != 1 or len(set(ch.spec.N)) != 1:
        raise AsymmetricSpec(f"Antenna counts differ between users: {ch.spec}")

    return ch.spec.M[0], ch.spec.N[0]


@dataclass(frozen=True)
class AlignmentMatrix:
    """
    Block matrix whose kernel holds alignment paths of r + 1 transmit
    vectors starting after user `start`
    """

    r: int
    start: int
    matrix: ComplexMatrix
    blocks: dict[tuple[int, int], tuple[int, int]] = field(default_factory=dict)

    @property
    def M(self) -> int:
        return self.matrix.shape[1] // (self.r + 1)

    def transmitter(self, block: int) -> int:
        """User owning column block `block` (0-based)"""
        return cyc(self.start + block + 1)


def build_alignment_matrix(ch: ChannelSet, start: int, r: int) -> AlignmentMatrix:
    M, N = antennas(ch)
    if r < 0:
        raise InvalidParameter(f"Path parameter must be non-negative, got {r}")
    if start not in (1, 2, 3):
        raise InvalidParameter(f"Start user must be 1, 2 or 3, got {start}")

    sequence = [cyc(start + m) for m in range(r + 2)]
    matrix = np.zeros((r * N, (r + 1) * M), dtype=np.complex128)
    blocks = {}

    for b in range(r):
        receiver, near, far = sequence[b], sequence[b + 1], sequence[b + 2]
        rows = slice(b * N, (b + 1) * N)
        matrix[rows, b * M:(b + 1) * M] = ch.H(receiver, near)
        matrix[rows, (b + 1) * M:(b + 2) * M] = ch.H(receiver, far)
        blocks[b, b] = (receiver, near)
        blocks[b, b + 1] = (receiver, far)

    matrix.setflags(write=False)
    return AlignmentMatrix(r, start, matrix, blocks)


def rank_check_Ar(ch: ChannelSet, start: int, r: int) -> bool:
    A = build_alignment_matrix(ch, start, r)
    M, N = antennas(ch)
    return rank(A.matrix) == min(r * N, (r + 1) * M)


def path_kernel(ch: ChannelSet, start: int, r: int) -> ComplexMatrix:
    """Orthonormal basis of the alignment paths of length r + 1"""
    return kernel_basis(build_alignment_matrix(ch, start, r).matrix)
