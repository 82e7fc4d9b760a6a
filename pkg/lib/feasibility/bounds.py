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

from typing import Iterator, Sequence

from lib.core.exceptions import HypothesisViolated, InvalidParameter
from lib.core.logger import logger
from lib.core.settings import DEFAULT_MAX_PATH_LENGTH
from lib.core.structures import ProblemSpec
from lib.feasibility.verdict import FeasibilityVerdict, Status, passed, violated


def check_dimensions(spec: ProblemSpec) -> FeasibilityVerdict:
    for i, user in enumerate(spec.users, 1):
        if user.d > min(user.M, user.N):
            return FeasibilityVerdict(
                Status.INFEASIBLE,
                certificates=(violated("dimensions", i, min(user.M, user.N) - user.d),),
            )

    return FeasibilityVerdict(Status.NECESSARY_PASS, certificates=(passed("dimensions"),))


def check_triple(spec: ProblemSpec, i: int, j: int, k: int) -> bool:
    if len({i, j, k}) != 3:
        raise InvalidParameter(f"Users {i}, {j}, {k} are not pairwise distinct")

    ui, uj, uk = spec.user(i), spec.user(j), spec.user(k)
    streams = ui.d + uj.d + uk.d

    return streams <= max(ui.N, uj.M + uk.M) and streams <= max(ui.M, uj.N + uk.N)


def check_all_triples(spec: ProblemSpec) -> FeasibilityVerdict:
    for i in range(1, spec.K + 1):
        others = [u for u in range(1, spec.K + 1) if u != i]
        for a, j in enumerate(others):
            for k in others[a + 1:]:
                if not check_triple(spec, i, j, k):
                    return FeasibilityVerdict(
                        Status.INFEASIBLE, certificates=(violated("triple", (i, j, k)),)
                    )

    return FeasibilityVerdict(Status.NECESSARY_PASS, certificates=(passed("triple"),))


def admissible(seq: Sequence[int]) -> bool:
    """
    Index sequences an alignment path may follow: no index repeats at
    distance one or two, and a repeated index is never followed by the
    index two steps past its other occurrence
    """
    n = len(seq)
    for a in range(n):
        if a + 1 < n and seq[a] == seq[a + 1]:
            return False
        if a + 2 < n and seq[a] == seq[a + 2]:
            return False

    for a in range(n - 1):
        for b in range(n - 2):
            if a != b and seq[a] == seq[b] and seq[a + 1] == seq[b + 2]:
                return False

    return True


def _constant(values: Sequence[int]) -> bool:
    return len(set(values)) <= 1


def _forms(spec: ProblemSpec, seq: Sequence[int]) -> tuple[bool, bool]:
    r = len(seq) - 2
    M = [spec.user(i).M for i in seq]
    N = [spec.user(i).N for i in seq]

    stated = _constant(N[:r]) and _constant(M[1:])
    reversed_ = _constant(M[:r]) and _constant(N[1:])
    return stated, reversed_


def _viable(spec: ProblemSpec, prefix: Sequence[int]) -> bool:
    # Whether some extension of the prefix can still satisfy either hypothesis
    M = [spec.user(i).M for i in prefix]
    N = [spec.user(i).N for i in prefix]
    settled = max(len(prefix) - 2, 0)

    stated = _constant(N[:settled]) and _constant(M[1:])
    reversed_ = _constant(M[:settled]) and _constant(N[1:])
    return stated or reversed_


def check_path_bound(spec: ProblemSpec, seq: Sequence[int]) -> bool:
    seq = tuple(seq)
    if len(seq) < 2:
        raise HypothesisViolated(f"Sequence {seq} is shorter than two indices")
    if any(not 1 <= i <= spec.K for i in seq):
        raise HypothesisViolated(f"Sequence {seq} names users outside 1..{spec.K}")
    if not admissible(seq):
        raise HypothesisViolated(f"Sequence {seq} repeats indices too closely")

    stated, reversed_ = _forms(spec, seq)
    if not stated and not reversed_:
        raise HypothesisViolated(f"Antenna counts along {seq} are not equal where required")

    r = len(seq) - 2
    streams = sum(spec.user(i).d for i in seq[:r]) + sum(spec.user(i).d for i in seq[1:])
    head, tail = spec.user(seq[0]), spec.user(seq[-1])

    holds = True
    if stated:
        holds &= streams <= max(r * head.N, (r + 1) * tail.M)
    if reversed_:
        holds &= streams <= max(r * head.M, (r + 1) * tail.N)

    return holds


def _sequences(spec: ProblemSpec, max_length: int) -> Iterator[tuple[int, ...]]:
    users = range(1, spec.K + 1)

    def extend(prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if len(prefix) >= 2:
            yield prefix
        if len(prefix) == max_length:
            return

        seen_fresh = set()
        for i in users:
            candidate = prefix + (i,)
            if i not in prefix:
                # Unused users with identical parameters give equivalent sequences
                key = spec.user(i).as_tuple()
                if key in seen_fresh:
                    continue
                seen_fresh.add(key)

            if admissible(candidate) and _viable(spec, candidate):
                yield from extend(candidate)

    yield from extend(())


def check_all_path_bounds(
    spec: ProblemSpec, max_length: int = DEFAULT_MAX_PATH_LENGTH
) -> FeasibilityVerdict:
    if max_length < 2:
        raise InvalidParameter(f"Path sequences need at least two indices, got {max_length}")

    checked = 0
    for seq in _sequences(spec, max_length):
        if not any(_forms(spec, seq)):
            continue

        checked += 1
        if not check_path_bound(spec, seq):
            logger.info(f"Path bound violated for {spec} along {seq}")
            return FeasibilityVerdict(
                Status.INFEASIBLE, certificates=(violated("path-bound", seq, len(seq) - 2),)
            )

    logger.debug(f"Checked {checked} path sequences up to length {max_length}")
    return FeasibilityVerdict(
        Status.NECESSARY_PASS, certificates=(passed("path-bound", None, max_length - 2),)
    )
