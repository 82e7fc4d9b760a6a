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


"""
JSON codecs for problem specs, channel sets and strategies

Matrices are stored as {"rows", "cols", "re", "im"} with entries in
row-major order. Cross channels are keyed "i,j" (receiver, transmitter),
direct channels and strategy bases by "i".
"""

from __future__ import annotations

import json
from typing import Any, Mapping, Optional

import numpy as np

from lib.core.exceptions import AlignmentError, InvalidChannelFile, InvalidSpec
from lib.core.structures import ChannelSet, ComplexMatrix, ProblemSpec, Strategy
from lib.utils.file import FileUtils


def encode_matrix(matrix: ComplexMatrix) -> dict[str, Any]:
    rows, cols = matrix.shape
    flat = np.asarray(matrix, dtype=np.complex128).reshape(-1)
    return {
        "rows": rows,
        "cols": cols,
        "re": flat.real.tolist(),
        "im": flat.imag.tolist(),
    }


def decode_matrix(data: Mapping[str, Any], name: str = "matrix") -> ComplexMatrix:
    try:
        rows, cols = int(data["rows"]), int(data["cols"])
        re = np.asarray(data["re"], dtype=float)
        im = np.asarray(data["im"], dtype=float)
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidChannelFile(f"Malformed {name}: {e}")

    if re.shape != (rows * cols,) or im.shape != (rows * cols,):
        raise InvalidChannelFile(f"{name} declares {rows}x{cols} but holds {re.size}/{im.size} entries")

    return (re + 1j * im).reshape(rows, cols)


def _pair_key(key: str) -> tuple[int, int]:
    try:
        i, j = key.split(",")
        return int(i), int(j)
    except ValueError:
        raise InvalidChannelFile(f"Invalid channel key {key!r}, expected 'i,j'")


def _user_key(key: str) -> int:
    try:
        return int(key)
    except ValueError:
        raise InvalidChannelFile(f"Invalid user key {key!r}")


def jsonable(value: Any) -> Any:
    """Plain JSON types for result dicts holding numpy scalars or tuples"""
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.ndarray):
        return encode_matrix(value)

    return value


def encode_channels(ch: ChannelSet) -> dict[str, Any]:
    return {
        "spec": ch.spec.to_dict(),
        "seed": ch.seed,
        "cross": {f"{i},{j}": encode_matrix(ch.cross[i, j]) for i, j in ch.spec.pairs()},
        "direct": None if ch.direct is None else {
            str(i): encode_matrix(h) for i, h in sorted(ch.direct.items())
        },
    }


def decode_channels(data: Mapping[str, Any]) -> ChannelSet:
    try:
        spec = ProblemSpec.from_dict(data["spec"])
        cross = {
            _pair_key(key): decode_matrix(value, f"H_{key}")
            for key, value in data["cross"].items()
        }
    except (KeyError, TypeError, AttributeError) as e:
        raise InvalidChannelFile(f"Malformed channel file: {e}")
    except InvalidSpec as e:
        raise InvalidChannelFile(str(e))

    direct = None
    if data.get("direct"):
        direct = {
            _user_key(key): decode_matrix(value, f"H_{key},{key}")
            for key, value in data["direct"].items()
        }

    return ChannelSet(spec, cross, direct, data.get("seed"))


def encode_strategy(strategy: Strategy, spec: Optional[ProblemSpec] = None) -> dict[str, Any]:
    data: dict[str, Any] = {
        "U": {str(i): encode_matrix(u) for i, u in enumerate(strategy.U, 1)},
        "V": {str(i): encode_matrix(v) for i, v in enumerate(strategy.V, 1)},
        "meta": jsonable(strategy.meta),
    }
    if spec is not None:
        data["spec"] = spec.to_dict()

    return data


def decode_strategy(data: Mapping[str, Any]) -> Strategy:
    # `ia solve` results wrap the strategy next to its verification report
    if "strategy" in data:
        data = data["strategy"]

    try:
        U = {_user_key(k): decode_matrix(v, f"U_{k}") for k, v in data["U"].items()}
        V = {_user_key(k): decode_matrix(v, f"V_{k}") for k, v in data["V"].items()}
    except (KeyError, TypeError, AttributeError) as e:
        raise InvalidChannelFile(f"Malformed strategy file: {e}")

    K = len(U)
    if sorted(U) != list(range(1, K + 1)) or sorted(V) != sorted(U):
        raise InvalidChannelFile("Strategy users must be numbered 1..K for both U and V")

    return Strategy(
        tuple(U[i] for i in range(1, K + 1)),
        tuple(V[i] for i in range(1, K + 1)),
        dict(data.get("meta") or {}),
    )


def _load(path: str) -> Any:
    try:
        return json.loads(FileUtils.read(path))
    except OSError as e:
        raise InvalidChannelFile(f"Cannot read {path}: {e.strerror}")
    except json.JSONDecodeError as e:
        raise InvalidChannelFile(f"{path} is not valid JSON: {e}")


def load_spec(path: str) -> ProblemSpec:
    data = _load(path)
    # A channel file carries its spec too
    if isinstance(data, dict) and "spec" in data:
        data = data["spec"]

    return ProblemSpec.from_dict(data)


def load_channels(path: str) -> ChannelSet:
    try:
        return decode_channels(_load(path))
    except InvalidChannelFile:
        raise
    except AlignmentError as e:
        raise InvalidChannelFile(f"{path}: {e}")


def load_strategy(path: str) -> Strategy:
    return decode_strategy(_load(path))


def dumps(data: Any) -> str:
    return json.dumps(jsonable(data), sort_keys=True, indent=4)
