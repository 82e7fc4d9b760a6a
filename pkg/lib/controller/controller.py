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

from typing import Any, Callable

from lib.construct.solver import solve_3user
from lib.construct.square import enumerate_square_solutions
from lib.core.channels import generate_channels
from lib.core.data import options
from lib.core.exceptions import AlignmentError, FileExistsException, InvalidParameter
from lib.core.logger import enable_logging, logger
from lib.core.settings import DEFAULT_REGION_SIZE
from lib.core.structures import ChannelSet, ProblemSpec
from lib.feasibility.decide import decide
from lib.feasibility.dof import best_subset_dof, max_dof_fully_symmetric
from lib.feasibility.tables import dof_table, region_map
from lib.numsolve.newton import find_distinct_solutions, solve_newton
from lib.parse.channels import encode_channels, encode_strategy, jsonable, load_channels, load_spec, load_strategy
from lib.report.manager import ReportManager
from lib.schubert.chow import count_with_telemetry
from lib.schubert.witness import existence_witness
from lib.utils.common import broadcast
from lib.utils.file import FileUtils
from lib.utils.random import random_seed
from lib.verify.checks import alignment_overlaps, check_orthogonality
from lib.view.terminal import interface


class Controller:
    def __init__(self) -> None:
        self.exit_code = 0
        self.setup()
        self.run()

    def setup(self) -> None:
        if options["log_file"]:
            try:
                FileUtils.create_dir(FileUtils.parent(options["log_file"]))
                if not FileUtils.can_write(options["log_file"]):
                    raise OSError

                enable_logging()

            except OSError:
                interface.error(f'Couldn\'t create log file at {options["log_file"]}')
                exit(1)

        self.reporter = ReportManager(options["output_format"], options["output_file"])
        self.handlers: dict[str, Callable[[], dict[str, Any]]] = {
            "gen-channels": self.gen_channels,
            "feasibility": self.feasibility,
            "solve": self.solve,
            "verify": self.verify,
            "count": self.count,
            "witness": self.witness,
            "enumerate": self.enumerate,
            "dof": self.dof,
            "region-map": self.region_map,
        }

        interface.banner()

    def run(self) -> None:
        command = options["command"]
        logger.info(f"Running {command}")

        try:
            result = jsonable(self.handlers[command]())
        except AlignmentError as e:
            logger.exception(e)
            interface.error(f"{type(e).__name__}: {e}")
            exit(1)

        if options["json"]:
            interface.json(result)
        else:
            interface.result(command, result)

        try:
            interface.output_file(self.reporter.save(command, result))
        except (FileExistsException, OSError) as e:
            logger.exception(e)
            interface.error(str(e))
            exit(1)

        if options["log_file"]:
            interface.log_file(options["log_file"])

        if command == "verify" and not result["verification"]["passed"]:
            self.exit_code = 1

    # Inputs

    def problem_spec(self) -> ProblemSpec:
        if options["spec_file"]:
            return load_spec(options["spec_file"])

        if not (options["M"] and options["N"] and options["d"]):
            raise InvalidParameter("A problem spec is required: use --spec or --K, --M, --N and --d")

        K = options["K"] or max(len(options[name]) for name in ("M", "N", "d"))
        return ProblemSpec.from_lists(*(broadcast(options[name], K, name) for name in ("M", "N", "d")))

    def channels(self) -> ChannelSet:
        if not options["channels_file"]:
            raise InvalidParameter("A channel file is required, use --channels")

        return load_channels(options["channels_file"])

    def scalar(self, name: str) -> int:
        values = options[name]
        if not values:
            raise InvalidParameter(f"--{name} is required")
        if len(values) != 1:
            raise InvalidParameter(f"--{name} must be a single value for this command")

        return values[0]

    def users(self) -> int:
        if not options["K"]:
            raise InvalidParameter("--K is required")

        return options["K"]

    # Commands

    def gen_channels(self) -> dict[str, Any]:
        seed = options["seed"] if options["seed"] is not None else random_seed()
        return encode_channels(generate_channels(self.problem_spec(), seed))

    def feasibility(self) -> dict[str, Any]:
        spec = self.problem_spec()
        max_length = options["max_r"] + 2 if options["all_path_bounds"] else None
        verdict = decide(spec, max_length)
        return {"spec": spec.to_dict(), "verdict": verdict.to_dict()}

    def solve(self) -> dict[str, Any]:
        ch = self.channels()
        spec = ch.spec
        method = options["method"]

        if options["enumerate"]:
            if not spec.symmetric_K3():
                raise InvalidParameter("--enumerate needs a symmetric three-user spec")

            solutions = enumerate_square_solutions(ch, spec.d[0], options["max_solutions"])
            return {
                "spec": spec.to_dict(),
                "method": "eigen",
                "count": len(solutions),
                "solutions": [encode_strategy(s) for s in solutions],
            }

        if method == "newton" or (method == "auto" and not spec.symmetric_K3()):
            strategy = solve_newton(
                ch,
                options["seed"],
                options["restarts"],
                options["max_iterations"],
                options["newton_tol"],
            )
        else:
            if not spec.symmetric_K3():
                raise InvalidParameter(f"The {method} method needs a symmetric three-user spec")

            strategy = solve_3user(ch, spec.d[0], options["seed"], method, options["selection"])

        report = check_orthogonality(ch, strategy, options["verify_tol"])
        return {
            "spec": spec.to_dict(),
            "method": method,
            "strategy": encode_strategy(strategy, spec),
            "verification": report.to_dict(),
        }

    def verify(self) -> dict[str, Any]:
        ch = self.channels()
        if not options["strategy_file"]:
            raise InvalidParameter("A strategy file is required, use --strategy")

        strategy = load_strategy(options["strategy_file"])
        report = check_orthogonality(ch, strategy, options["verify_tol"])
        overlaps = alignment_overlaps(ch, strategy) if ch.K == 3 else None
        return {
            "spec": ch.spec.to_dict(),
            "verification": report.to_dict(),
            "overlaps": overlaps,
        }

    def count(self) -> dict[str, Any]:
        return count_with_telemetry(
            self.users(),
            self.scalar("d"),
            self.scalar("N"),
            options["term_budget"],
            options["relation_order"],
        ).to_dict()

    def witness(self) -> dict[str, Any]:
        return existence_witness(self.users(), self.scalar("d"), self.scalar("N")).to_dict()

    def enumerate(self) -> dict[str, Any]:
        ch = self.channels()
        solutions = find_distinct_solutions(
            ch,
            options["attempts"],
            options["seed"],
            options["thread_count"],
            options["newton_tol"],
            options["dedup_tol"],
        )
        if not solutions:
            interface.warning(f"None of the {options['attempts']} starts converged, try more --attempts")

        return {
            "spec": ch.spec.to_dict(),
            "attempts": options["attempts"],
            "distinct": len(solutions),
            "solutions": [encode_strategy(s) for s in solutions],
        }

    def dof(self) -> dict[str, Any]:
        K = self.users()
        if options["max_N"]:
            return {"K": K, "rows": [row.to_dict() for row in dof_table(K, options["max_N"])]}

        N = self.scalar("N")
        return {
            "K": K,
            "N": N,
            "symmetric": max_dof_fully_symmetric(K, N).to_dict(),
            "subset": best_subset_dof(K, N).to_dict(),
        }

    def region_map(self) -> dict[str, Any]:
        d = self.scalar("d")
        max_M = options["max_M"] or DEFAULT_REGION_SIZE
        max_N = options["max_N"] or DEFAULT_REGION_SIZE
        return {
            "d": d,
            "max_M": max_M,
            "max_N": max_N,
            "cells": [[cell.to_dict() for cell in row] for row in region_map(d, max_M, max_N)],
        }
