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


"""Human readable lines for the result dict of each command"""

from __future__ import annotations

from typing import Any, Callable, Optional

from lib.core.settings import REGION_LABEL_CAP


def _spec(result: dict[str, Any]) -> str:
    spec = result.get("spec")
    if not spec:
        return ""

    users = spec["users"]
    if all(u == users[0] for u in users):
        u = users[0]
        return f"K={spec['K']} M={u['M']} N={u['N']} d={u['d']}"

    columns = {name: ",".join(str(u[name]) for u in users) for name in "MNd"}
    return f"K={spec['K']} M={columns['M']} N={columns['N']} d={columns['d']}"


def _gen_channels(result: dict[str, Any]) -> list[str]:
    direct = "with" if result.get("direct") else "without"
    return [
        f"Channels: {_spec(result)}, seed {result['seed']}",
        f"{len(result['cross'])} cross links, {direct} direct links",
    ]


def _feasibility(result: dict[str, Any]) -> list[str]:
    verdict = result["verdict"]
    lines = [f"{_spec(result)}: {verdict['status']}"]
    if verdict["dimension"] is not None:
        lines.append(f"Dimension of the solution variety: {verdict['dimension']}")

    for certificate in verdict["certificates"]:
        mark = "ok  " if certificate["holds"] else "FAIL"
        line = f"  [{mark}] {certificate['condition']}"
        if certificate["witness"] is not None:
            line += f" {certificate['witness']}"
        if certificate["value"] is not None:
            line += f" (slack {certificate['value']})"
        lines.append(line)

    return lines


def _verification(report: dict[str, Any]) -> list[str]:
    lines = [
        f"Verification: {'passed' if report['passed'] else 'FAILED'}",
        f"  max orthogonality residual {report['max_orthogonality_residual']:.3e} (tol {report['tol']:g})",
    ]
    if report["direct_rank_ok"] is not None:
        ok = sum(report["direct_rank_ok"])
        lines.append(f"  direct links with full rank: {ok}/{len(report['direct_rank_ok'])}")
    if not report["dims_ok"]:
        lines.append("  strategy dimensions do not match the problem")
    if not report["passed"] and report.get("worst_pair"):
        pair = report["worst_pair"]
        lines.append(f"  worst pair {pair}: residual {report['residuals'][pair]:.3e}")

    return lines


def _solve(result: dict[str, Any]) -> list[str]:
    if "solutions" in result:
        return [f"{_spec(result)}: {result['count']} solutions ({result['method']})"]

    meta = result["strategy"].get("meta", {})
    lines = [f"{_spec(result)}: solved with {meta.get('method', result['method'])}"]
    if "restart" in meta:
        lines.append(f"  restart {meta['restart']}, {meta['total_iterations']} iterations")

    return lines + _verification(result["verification"])


def _verify(result: dict[str, Any]) -> list[str]:
    lines = _verification(result["verification"])
    if result.get("overlaps") is not None:
        lines.append(f"  interference overlap per receiver: {result['overlaps']}")

    return lines


def _count(result: dict[str, Any]) -> list[str]:
    factors = " * ".join(
        f"{p}^{e}" if e > 1 else p for p, e in result["factorization"].items()
    )
    lines = [f"K={result['K']} d={result['d']} N={result['N']}: {result['count']} solutions"]
    if factors:
        lines.append(f"  = {factors}")
    lines.append(f"  peak terms {max(result['term_counts'], default=0)}")
    return lines


def _witness(result: dict[str, Any]) -> list[str]:
    lines = [f"K={result['K']} d={result['d']} N={result['N']}: nonzero product verified"]
    for name, partition in result["products"].items():
        lines.append(f"  {name}: {partition}")

    return lines


def _enumerate(result: dict[str, Any]) -> list[str]:
    return [
        f"{_spec(result)}: {result['distinct']} distinct solutions from {result['attempts']} starts"
    ]


def _dof(result: dict[str, Any]) -> list[str]:
    if "rows" in result:
        lines = [f"K={result['K']}", "   N  d  total  normalized  best(k,d,total)  regime"]
        for row in result["rows"]:
            lines.append(
                f"{row['N']:>4} {row['d']:>2} {row['total_dof']:>6} {row['normalized']:>11}"
                f"  ({row['best_k']},{row['best_d']},{row['best_total']}){'':>6}{row['regime']}"
            )
        return lines

    symmetric, subset = result["symmetric"], result["subset"]
    return [
        f"K={result['K']} N={result['N']}: d={symmetric['d']} per user, "
        f"total {symmetric['total_dof']} ({symmetric['normalized']} per antenna)",
        f"  best subset: {subset['k']} users x {subset['d']} = {subset['total']}",
    ]


def _region_map(result: dict[str, Any]) -> list[str]:
    lines = [f"d={result['d']}, rows M=1..{result['max_M']}, columns N=1..{result['max_N']}"]
    lines.append("  M\\N " + "".join(f"{N:>4}" for N in range(1, result["max_N"] + 1)))
    for row in result["cells"]:
        cells = ""
        for cell in row:
            label = cell["label"]
            if label == "inf" or label > REGION_LABEL_CAP:
                label = "+"
            cells += f"{(str(label) if cell['feasible'] else '.'):>4}"
        lines.append(f"{row[0]['M']:>5} {cells}")

    return lines


RENDERERS: dict[str, Callable[[dict[str, Any]], list[str]]] = {
    "gen-channels": _gen_channels,
    "feasibility": _feasibility,
    "solve": _solve,
    "verify": _verify,
    "count": _count,
    "witness": _witness,
    "enumerate": _enumerate,
    "dof": _dof,
    "region-map": _region_map,
}


def summarize(command: str, result: dict[str, Any]) -> list[str]:
    return RENDERERS[command](result)


def outcome(command: str, result: dict[str, Any]) -> Optional[bool]:
    """True/False for results that pass or fail, None for plain facts"""
    if command == "feasibility":
        status = result["verdict"]["status"]
        return {"Feasible": True, "Infeasible": False}.get(status)

    if command in ("solve", "verify") and "verification" in result:
        return result["verification"]["passed"]

    return None
