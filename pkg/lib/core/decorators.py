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

import threading

from functools import wraps
from time import perf_counter
from typing import Callable, TypeVar
from typing_extensions import ParamSpec

from lib.core.logger import logger

_lock = threading.Lock()

P = ParamSpec("P")
T = TypeVar("T")


def locked(func: Callable[P, T]) -> Callable[P, T]:
    @wraps(func)
    def with_locking(*args: P.args, **kwargs: P.kwargs) -> T:
        with _lock:
            return func(*args, **kwargs)

    return with_locking


def timed(func: Callable[P, T]) -> Callable[P, T]:
    """Log the wall time of each call at debug level"""

    @wraps(func)
    def with_timing(*args: P.args, **kwargs: P.kwargs) -> T:
        start = perf_counter()
        try:
            return func(*args, **kwargs)
        finally:
            logger.debug(f"{func.__qualname__} took {perf_counter() - start:.4f}s")

    return with_timing
