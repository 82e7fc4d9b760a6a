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

from dataclasses import dataclass, field
from typing import Any, Iterator, Mapping, Optional, Sequence

import numpy as np
import numpy.typing as npt

from lib.core.exceptions import InvalidSpec, ShapeMismatch

ComplexMatrix = npt.NDArray[np.complex128]


def _frozen(matrix: Any) -> ComplexMatrix:
    array = np.array(matrix, dtype=np.complex128, copy=True)
    if array.ndim != 2:
        raise ShapeMismatch(f"Expected a 2-d matrix, got {array.ndim} dimension(s)")

    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class User:
    M: int
    N: int
    d: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.M, self.N, self.d)


@dataclass(frozen=True)
class ProblemSpec:
    """
    K-user MIMO interference channel instance: user i has M_i transmit
    antennas, N_i receive antennas and wants d_i streams
    """

    users: tuple[User, ...]

    def __post_init__(self) -> None:
        users = tuple(
            user if isinstance(user, User) else User(*user) for user in self.users
        )
        object.__setattr__(self, "users", users)

        if len(users) < 2:
            raise InvalidSpec(f"At least 2 users are required, got {len(users)}")

        for index, user in enumerate(users, 1):
            for name, value in zip("MNd", user.as_tuple()):
                if not isinstance(value, (int, np.integer)) or value < 1:
                    raise InvalidSpec(f"{name}_{index} must be a positive integer, got {value!r}")

    @classmethod
    def from_symmetric(cls, K: int, M: int, N: int, d: int) -> ProblemSpec:
        return cls(tuple(User(M, N, d) for _ in range(K)))

    @classmethod
    def from_lists(cls, M: Sequence[int], N: Sequence[int], d: Sequence[int]) -> ProblemSpec:
        if not len(M) == len(N) == len(d):
            raise InvalidSpec("M, N and d must have the same number of users")

        return cls(tuple(User(*values) for values in zip(M, N, d)))

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> ProblemSpec:
        try:
            users = tuple(User(u["M"], u["N"], u["d"]) for u in data["users"])
        except (KeyError, TypeError) as e:
            raise InvalidSpec(f"Malformed problem spec: {e}")

        spec = cls(users)
        if "K" in data and data["K"] != spec.K:
            raise InvalidSpec(f"K={data['K']} does not match {spec.K} listed users")

        return spec

    def to_dict(self) -> dict[str, Any]:
        return {
            "K": self.K,
            "users": [{"M": u.M, "N": u.N, "d": u.d} for u in self.users],
        }

    @property
    def K(self) -> int:
        return len(self.users)

    @property
    def M(self) -> tuple[int, ...]:
        return tuple(user.M for user in self.users)

    @property
    def N(self) -> tuple[int, ...]:
        return tuple(user.N for user in self.users)

    @property
    def d(self) -> tuple[int, ...]:
        return tuple(user.d for user in self.users)

    def user(self, i: int) -> User:
        """1-based user lookup"""
        return self.users[i - 1]

    def symmetric(self) -> bool:
        return len(set(self.users)) == 1

    def symmetric_K3(self) -> bool:
        return self.K == 3 and self.symmetric()

    def dimension(self) -> int:
        # Dimension of the product of Grassmannians the strategies live in
        return sum(u.d * (u.M - u.d) + u.d * (u.N - u.d) for u in self.users)

    def equation_count(self) -> int:
        total = sum(self.d)
        return total * total - sum(d * d for d in self.d)

    def pairs(self) -> Iterator[tuple[int, int]]:
        """Ordered cross pairs (i, j), receiver i, transmitter j, i != j"""
        for i in range(1, self.K + 1):
            for j in range(1, self.K + 1):
                if i != j:
                    yield i, j

    def __str__(self) -> str:
        if self.symmetric():
            u = self.users[0]
            return f"K={self.K} M={u.M} N={u.N} d={u.d}"

        return f"K={self.K} M={list(self.M)} N={list(self.N)} d={list(self.d)}"


@dataclass(frozen=True)
class ChannelSet:
    spec: ProblemSpec
    cross: Mapping[tuple[int, int], ComplexMatrix]
    direct: Optional[Mapping[int, ComplexMatrix]] = None
    seed: Optional[int] = None

    def __post_init__(self) -> None:
        cross = {key: _frozen(value) for key, value in self.cross.items()}
        for i, j in self.spec.pairs():
            if (i, j) not in cross:
                raise ShapeMismatch(f"Missing cross channel H_{i},{j}")

            expected = (self.spec.user(i).N, self.spec.user(j).M)
            if cross[i, j].shape != expected:
                raise ShapeMismatch(
                    f"H_{i},{j} has shape {cross[i, j].shape}, expected {expected}"
                )

        extra = set(cross) - set(self.spec.pairs())
        if extra:
            raise ShapeMismatch(f"Unexpected cross channels: {sorted(extra)}")

        object.__setattr__(self, "cross", cross)

        if self.direct is not None:
            direct = {i: _frozen(value) for i, value in self.direct.items()}
            for i in range(1, self.spec.K + 1):
                user = self.spec.user(i)
                if i not in direct or direct[i].shape != (user.N, user.M):
                    raise ShapeMismatch(f"Direct channel H_{i},{i} missing or misshaped")

            object.__setattr__(self, "direct", direct)

    @property
    def K(self) -> int:
        return self.spec.K

    def H(self, i: int, j: int) -> ComplexMatrix:
        if i == j:
            if self.direct is None:
                raise KeyError(f"No direct channel for user {i}")

            return self.direct[i]

        return self.cross[i, j]

    def max_abs(self) -> float:
        return max(float(np.max(np.abs(h))) for h in self.cross.values())

    def restrict(self, rows: int, cols: int) -> ChannelSet:
        """Leading rows x cols sub-channels of every matrix"""
        spec = ProblemSpec(tuple(User(min(u.M, cols), min(u.N, rows), u.d) for u in self.spec.users))
        cross = {key: h[:rows, :cols] for key, h in self.cross.items()}
        direct = None
        if self.direct is not None:
            direct = {i: h[:rows, :cols] for i, h in self.direct.items()}

        return ChannelSet(spec, cross, direct, self.seed)

    def scaled(self, factor: complex) -> ChannelSet:
        cross = {key: factor * h for key, h in self.cross.items()}
        direct = None
        if self.direct is not None:
            direct = {i: factor * h for i, h in self.direct.items()}

        return ChannelSet(self.spec, cross, direct, self.seed)

    def reciprocal(self) -> ChannelSet:
        """
        Reverse every link: H'_ij = H_ji^H, so transmitters and receivers
        trade places and M, N are swapped for every user
        """
        spec = ProblemSpec(tuple(User(u.N, u.M, u.d) for u in self.spec.users))
        cross = {(i, j): self.cross[j, i].conj().T for i, j in self.spec.pairs()}
        direct = None
        if self.direct is not None:
            direct = {i: h.conj().T for i, h in self.direct.items()}

        return ChannelSet(spec, cross, direct, self.seed)


@dataclass(frozen=True)
class Strategy:
    U: tuple[ComplexMatrix, ...]
    V: tuple[ComplexMatrix, ...]
    meta: dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if len(self.U) != len(self.V):
            raise ShapeMismatch(f"{len(self.U)} transmit bases but {len(self.V)} receive bases")

        object.__setattr__(self, "U", tuple(_frozen(u) for u in self.U))
        object.__setattr__(self, "V", tuple(_frozen(v) for v in self.V))

    @property
    def K(self) -> int:
        return len(self.U)

    def conform(self, spec: ProblemSpec) -> None:
        if self.K != spec.K:
            raise ShapeMismatch(f"Strategy has {self.K} users, spec has {spec.K}")

        for i, (user, u, v) in enumerate(zip(spec.users, self.U, self.V), 1):
            if u.shape != (user.M, user.d):
                raise ShapeMismatch(f"U_{i} has shape {u.shape}, expected {(user.M, user.d)}")
            if v.shape != (user.N, user.d):
                raise ShapeMismatch(f"V_{i} has shape {v.shape}, expected {(user.N, user.d)}")

    def swapped(self) -> Strategy:
        """Strategy of the reciprocal channel set"""
        return Strategy(self.V, self.U, dict(self.meta))
