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

from typing import Optional, Sequence

from lib.construct.alignment import antennas
from lib.construct.paths import solve_paths
from lib.construct.square import solve_square
from lib.core.exceptions import InvalidParameter
from lib.core.logger import logger
from lib.core.structures import ChannelSet, Strategy


def solve_3user(
    ch: ChannelSet,
    d: int,
    seed: Optional[int] = None,
    method: str = "auto",
    selection: Optional[Sequence[int]] = None,
) -> Strategy:
    """
    Exact three-user strategy: eigenvectors when M = N, alignment paths
    when M < N, and alignment paths on the reciprocal channels when M > N
    """
    M, N = antennas(ch)
    if method == "auto":
        method = "eigen" if M == N else "paths"

    if method == "eigen":
        return solve_square(ch, d, selection if selection is not None else range(d))

    if method != "paths":
        raise InvalidParameter(f"Unknown exact method {method!r}")

    if M < N:
        return solve_paths(ch, M, N, d, seed)

    if M == N:
        raise InvalidParameter("Alignment paths need M != N, use the eigen method")

    logger.debug(f"M={M} > N={N}: constructing on the reciprocal channels")
    reciprocal = solve_paths(ch.reciprocal(), N, M, d, seed)
    strategy = reciprocal.swapped()
    strategy.meta["reciprocal"] = True
    return strategy
