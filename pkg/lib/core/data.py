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

from typing import Any

# Filled once by lib.core.options.parse_options()
options: dict[str, Any] = {
    "command": None,
    "config": None,
    "K": None,
    "M": None,
    "N": None,
    "d": None,
    "spec_file": None,
    "channels_file": None,
    "strategy_file": None,
    "method": "auto",
    "selection": None,
    "enumerate": False,
    "max_solutions": None,
    "restarts": 100,
    "attempts": 200,
    "max_iterations": 200,
    "term_budget": 5_000_000,
    "relation_order": "receiver",
    "all_path_bounds": False,
    "max_r": 6,
    "verify_tol": 1e-8,
    "newton_tol": 1e-10,
    "dedup_tol": 1e-6,
    "max_M": None,
    "max_N": None,
    "thread_count": 4,
    "seed": None,
    "json": False,
    "color": True,
    "quiet": False,
    "output_file": None,
    "output_format": None,
    "log_file": None,
    "log_file_size": 0,
}
