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

import os

from lib.core.exceptions import InvalidParameter
from lib.core.settings import CONFIG_ENV, SCRIPT_PATH, THREADS_ENV
from lib.utils.file import FileUtils


def get_config_file() -> str:
    return os.environ.get(CONFIG_ENV) or FileUtils.build_path(SCRIPT_PATH, "config.ini")


def thread_cap(requested: int) -> int:
    """Worker count, capped by the IA_THREADS environment variable"""
    cap = os.environ.get(THREADS_ENV)
    if not cap:
        return max(1, requested)

    try:
        return max(1, min(requested, int(cap)))
    except ValueError:
        return max(1, requested)


def parse_int_list(string: str, name: str = "value") -> list[int]:
    try:
        return [int(item) for item in string.split(",") if item.strip()]
    except ValueError:
        raise InvalidParameter(f"Invalid {name} list: {string!r}")


def broadcast(values: list[int], count: int, name: str) -> list[int]:
    """Repeat a single value `count` times; longer lists must match `count`"""
    if len(values) == 1:
        return values * count

    if len(values) != count:
        raise InvalidParameter(f"{name} has {len(values)} entries, expected {count}")

    return values
