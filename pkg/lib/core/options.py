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

from optparse import Values
from typing import Any, Optional, Sequence

from lib.core.exceptions import InvalidParameter
from lib.core.settings import (
    DEDUP_TOL,
    DEFAULT_ATTEMPTS,
    DEFAULT_MAX_PATH_LENGTH,
    DEFAULT_RESTARTS,
    DEFAULT_TERM_BUDGET,
    DEFAULT_THREADS,
    LM_MAX_ITERATIONS,
    NEWTON_TOL,
    OUTPUT_FORMATS,
    RELATION_ORDERS,
    SOLVE_METHODS,
    VERIFY_TOL,
)
from lib.parse.cmdline import parse_arguments
from lib.parse.config import ConfigParser
from lib.utils.common import parse_int_list, thread_cap
from lib.utils.file import File, FileUtils


def parse_options(argv: Optional[Sequence[str]] = None) -> dict[str, Any]:
    opt = merge_config(parse_arguments(argv))

    try:
        for name in ("M", "N", "d"):
            if getattr(opt, name):
                setattr(opt, name, parse_int_list(getattr(opt, name), name))

        if opt.selection:
            opt.selection = parse_int_list(opt.selection, "selection")
    except InvalidParameter as e:
        print(e)
        exit(1)

    for name in ("K", "max_M", "max_N", "restarts", "attempts", "max_iterations", "term_budget"):
        value = getattr(opt, name)
        if value is not None and value < 1:
            print(f"--{name.replace('_', '-')} must be greater than zero")
            exit(1)

    if opt.max_r < 0:
        print("--max-r must not be negative")
        exit(1)

    if opt.thread_count < 1:
        print("Threads number must be greater than zero")
        exit(1)

    opt.thread_count = thread_cap(opt.thread_count)

    for path in (opt.spec_file, opt.channels_file, opt.strategy_file):
        if path:
            _access_file(path)

    if opt.log_file:
        opt.log_file = FileUtils.get_abs_path(opt.log_file)

    if opt.output_file:
        opt.output_file = FileUtils.get_abs_path(opt.output_file)

    return vars(opt)


def _access_file(path: str) -> File:
    with File(path) as fd:
        if not fd.exists():
            print(f"{path} does not exist")
            exit(1)

        if not fd.is_valid():
            print(f"{path} is not a file")
            exit(1)

        if not fd.can_read():
            print(f"{path} cannot be read")
            exit(1)

        return fd


def merge_config(opt: Values) -> Values:
    config = ConfigParser()
    config.read(opt.config)

    # General
    opt.thread_count = opt.thread_count or config.safe_getint("general", "threads", DEFAULT_THREADS)
    if opt.seed is None:
        opt.seed = config.safe_getint("general", "seed", None)

    # Tolerances
    opt.verify_tol = opt.verify_tol or config.safe_getfloat("tolerances", "verify", VERIFY_TOL)
    opt.newton_tol = config.safe_getfloat("tolerances", "newton", NEWTON_TOL)
    opt.dedup_tol = config.safe_getfloat("tolerances", "dedup", DEDUP_TOL)

    # Solver
    opt.method = opt.method or config.safe_get("solver", "method", "auto", SOLVE_METHODS)
    opt.selection = opt.selection or config.safe_get("solver", "selection")
    opt.restarts = opt.restarts or config.safe_getint("solver", "restarts", DEFAULT_RESTARTS)
    opt.attempts = opt.attempts or config.safe_getint("solver", "attempts", DEFAULT_ATTEMPTS)
    opt.max_iterations = opt.max_iterations or config.safe_getint(
        "solver", "max-iterations", LM_MAX_ITERATIONS
    )

    # Counting
    opt.term_budget = opt.term_budget or config.safe_getint(
        "schubert", "term-budget", DEFAULT_TERM_BUDGET
    )
    opt.relation_order = opt.relation_order or config.safe_get(
        "schubert", "relation-order", "receiver", RELATION_ORDERS
    )

    # Feasibility
    opt.all_path_bounds = opt.all_path_bounds or config.safe_getboolean(
        "feasibility", "all-path-bounds"
    )
    if opt.max_r is None:
        opt.max_r = config.safe_getint("feasibility", "max-r", DEFAULT_MAX_PATH_LENGTH - 2)

    # View
    opt.json = opt.json or config.safe_getboolean("view", "json")
    opt.color = opt.color if opt.color is False else config.safe_getboolean("view", "color", True)
    opt.quiet = opt.quiet or config.safe_getboolean("view", "quiet-mode")

    # Output
    opt.output_file = opt.output_file or config.safe_get("output", "output-file")
    opt.output_format = opt.output_format or config.safe_get(
        "output", "output-format", None, OUTPUT_FORMATS
    )
    opt.log_file = opt.log_file or config.safe_get("output", "log-file")
    opt.log_file_size = config.safe_getint("output", "log-file-size")

    return opt
