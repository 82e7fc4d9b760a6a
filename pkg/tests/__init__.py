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


import os

from hypothesis import strategies as st

from lib.core.settings import SLOW_TESTS_ENV
from lib.core.structures import ProblemSpec


def slow_or(quick, full):
    """`full` when the slow suites are enabled, else `quick`"""
    return full if os.environ.get(SLOW_TESTS_ENV) else quick


specs = st.builds(
    lambda K, users: ProblemSpec.from_lists(*zip(*users[:K])),
    st.integers(2, 5),
    st.lists(
        st.tuples(st.integers(1, 6), st.integers(1, 6), st.integers(1, 3)).filter(
            lambda u: u[2] <= min(u[0], u[1])
        ),
        min_size=5,
        max_size=5,
    ),
)
