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

from dataclasses import dataclass
from typing import Any

from lib.core.exceptions import BadK, InfeasibleInput, InvalidParameter, WitnessFailed
from lib.core.logger import logger
from lib.schubert.chow import incidence_class
from lib.schubert.littlewood_richardson import schur_multiply_in_box
from lib.schubert.partition import GrassmannianShape, Partition, rectangle


@dataclass(frozen=True)
class Witness:
    """
    One incidence-class term per relation (receiver i, transmitter j)
    whose product is nonzero: `choices[i, j]` is the (transmitter,
    receiver) partition pair, `products` a surviving class per factor
    """

    K: int
    d: int
    N: int
    choices: dict[tuple[int, int], tuple[Partition, Partition]]
    products: dict[str, Partition]

    def to_dict(self) -> dict[str, Any]:
        return {
            "K": self.K,
            "d": self.d,
            "N": self.N,
            "verified": True,
            "choices": {
                f"{i},{j}": {"transmitter": list(u), "receiver": list(v)}
                for (i, j), (u, v) in sorted(self.choices.items())
            },
            "products": {name: list(p) for name, p in self.products.items()},
        }


def _transmitter_term(K: int, d: int, i: int, j: int) -> Partition:
    """Transmitter partition chosen for receiver i and transmitter j"""
    difference = (i - j) % K

    if K % 2:
        return rectangle(d, d) if difference <= (K - 1) // 2 else Partition()

    half = d // 2 if difference % 2 == 0 else d - d // 2
    if j % 2 == 0 and difference in (1, 2):
        return rectangle(d, half)

    return rectangle(half, d)


def _surviving(partitions: list[Partition], shape: GrassmannianShape) -> Partition:
    current = {Partition(): 1}
    for lam in partitions:
        following: dict[Partition, int] = {}
        for nu, coefficient in current.items():
            for rho, c in schur_multiply_in_box(nu, lam, shape.rows, shape.cols).items():
                following[rho] = following.get(rho, 0) + coefficient * c
        current = following
        if not current:
            raise WitnessFailed(f"Chosen terms multiply to zero in G({shape.d},{shape.m})")

    return max(current, key=lambda p: (p.size, tuple(p)))


def existence_witness(K: int, d: int, N: int) -> Witness:
    if K < 3:
        raise BadK(f"Existence witnesses need K >= 3, got {K}")
    if d < 1:
        raise InvalidParameter(f"d must be positive, got {d}")
    if 2 * N < (K + 1) * d:
        raise InfeasibleInput(f"2N={2 * N} < (K+1)d={(K + 1) * d}: no strategy exists")

    classes = dict(incidence_class(d))
    choices = {}
    for i in range(1, K + 1):
        for j in range(1, K + 1):
            if i == j:
                continue
            lam = _transmitter_term(K, d, i, j)
            if lam not in classes:
                raise WitnessFailed(f"{tuple(lam)} is not a term of the incidence class")
            choices[i, j] = (lam, classes[lam])

    shape = GrassmannianShape(d, N)
    products = {}
    for u in range(1, K + 1):
        products[f"U{u}"] = _surviving([choices[i, u][0] for i in range(1, K + 1) if i != u], shape)
    for v in range(1, K + 1):
        products[f"V{v}"] = _surviving([choices[v, j][1] for j in range(1, K + 1) if j != v], shape)

    logger.info(f"Existence witness verified for K={K} d={d} N={N}")
    return Witness(K, d, N, choices, products)
