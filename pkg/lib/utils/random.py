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

from typing import Optional, Sequence, Union

import numpy as np

from lib.core.structures import ComplexMatrix

SeedLike = Union[None, int, Sequence[int]]


def make_rng(seed: SeedLike = None) -> np.random.Generator:
    # PCG64 keeps streams identical across platforms and numpy versions
    return np.random.Generator(np.random.PCG64(seed))


def complex_gaussian(rng: np.random.Generator, rows: int, cols: int) -> ComplexMatrix:
    """
    Standard circularly-symmetric complex Gaussian matrix. The real block
    is drawn first, then the imaginary block, both row-major
    """
    real = rng.standard_normal((rows, cols))
    imag = rng.standard_normal((rows, cols))
    return (real + 1j * imag) / np.sqrt(2)


def random_unitary(rng: np.random.Generator, n: int) -> ComplexMatrix:
    q, r = np.linalg.qr(complex_gaussian(rng, n, n))
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases


def random_seed(rng: Optional[np.random.Generator] = None) -> int:
    rng = rng or np.random.default_rng()
    return int(rng.integers(0, 2**31 - 1))
