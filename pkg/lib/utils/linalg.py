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

import numpy as np
import scipy.linalg

from lib.core.exceptions import ConvergenceFailure, RankDeficient
from lib.core.settings import EIG_RESIDUAL_RTOL, ORTHONORMAL_RTOL, RANK_RTOL
from lib.core.structures import ComplexMatrix


def singular_values(A: ComplexMatrix) -> np.ndarray:
    if 0 in A.shape:
        return np.zeros(0)

    return scipy.linalg.svdvals(A)


def rank(A: ComplexMatrix, rtol: float = RANK_RTOL) -> int:
    sigma = singular_values(A)
    if not sigma.size or sigma[0] == 0:
        return 0

    return int(np.sum(sigma > rtol * sigma[0]))


def orthonormal_basis(A: ComplexMatrix) -> ComplexMatrix:
    """
    Orthonormal basis of the column space of a full column rank matrix,
    with the phases fixed so that R has a positive real diagonal
    """
    A = np.asarray(A, dtype=np.complex128)
    rows, cols = A.shape
    if cols == 0:
        return np.zeros((rows, 0), dtype=np.complex128)

    numerical_rank = rank(A, ORTHONORMAL_RTOL)
    if numerical_rank < cols:
        raise RankDeficient(f"Matrix of shape {A.shape} has numerical rank {numerical_rank}")

    q, r = scipy.linalg.qr(A, mode="economic")
    diagonal = np.diag(r)
    phases = diagonal / np.abs(diagonal)
    return q * phases


def kernel_basis(A: ComplexMatrix, rtol: float = RANK_RTOL) -> ComplexMatrix:
    A = np.asarray(A, dtype=np.complex128)
    rows, cols = A.shape
    if rows == 0:
        return np.eye(cols, dtype=np.complex128)
    if cols == 0:
        return np.zeros((0, 0), dtype=np.complex128)

    return scipy.linalg.null_space(A, rcond=rtol)


def orthogonal_complement(A: ComplexMatrix, dimension: Optional[int] = None) -> ComplexMatrix:
    """Orthonormal basis of the vectors orthogonal to every column of A"""
    A = np.asarray(A, dtype=np.complex128)
    if A.shape[1] == 0:
        return np.eye(dimension if dimension is not None else A.shape[0], dtype=np.complex128)

    return kernel_basis(A.conj().T)


def eig(A: ComplexMatrix) -> tuple[np.ndarray, ComplexMatrix]:
    A = np.asarray(A, dtype=np.complex128)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"Eigendecomposition needs a square matrix, got {A.shape}")

    try:
        values, vectors = scipy.linalg.eig(A)
    except (scipy.linalg.LinAlgError, ValueError) as e:
        raise ConvergenceFailure(str(e))

    if not np.all(np.isfinite(values)):
        raise ConvergenceFailure("Eigenvalue iteration produced non-finite values")

    vectors = vectors / np.linalg.norm(vectors, axis=0)
    scale = np.linalg.norm(A, 2) if A.size else 0.0
    residuals = np.linalg.norm(A @ vectors - vectors * values, axis=0)
    if residuals.size and residuals.max() > EIG_RESIDUAL_RTOL * max(scale, np.finfo(float).tiny):
        raise ConvergenceFailure(f"Eigenpair residual {residuals.max():.3e} exceeds tolerance")

    return values, vectors


def principal_angles(A: ComplexMatrix, B: ComplexMatrix) -> np.ndarray:
    """Principal angles between the column spaces, largest first"""
    if A.shape[1] == 0 or B.shape[1] == 0:
        return np.zeros(0)

    return scipy.linalg.subspace_angles(A, B)


def overlap_dimension(A: ComplexMatrix, B: ComplexMatrix, rtol: float = RANK_RTOL) -> int:
    """dim(col A ∩ col B) = rank A + rank B - rank [A B]"""
    return rank(A, rtol) + rank(B, rtol) - rank(np.hstack([A, B]), rtol)
