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

from lib.core.logger import logger
from lib.core.structures import ChannelSet, ProblemSpec
from lib.utils.random import complex_gaussian, make_rng


def generate_channels(spec: ProblemSpec, seed: int) -> ChannelSet:
    """
    Fill every cross and direct channel with i.i.d. standard complex
    Gaussian entries. Stream order: cross channels by receiver then
    transmitter, then direct channels by user
    """
    rng = make_rng(seed)
    cross = {}
    for i, j in spec.pairs():
        cross[i, j] = complex_gaussian(rng, spec.user(i).N, spec.user(j).M)

    direct = {}
    for i, user in enumerate(spec.users, 1):
        direct[i] = complex_gaussian(rng, user.N, user.M)

    logger.debug(f"Generated channels for {spec} with seed {seed}")
    return ChannelSet(spec, cross, direct, seed)
