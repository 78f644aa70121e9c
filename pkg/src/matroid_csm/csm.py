"""Chern-Schwartz-MacPherson cycles of matroids and their degrees.

The degree of ``csm_k(M)`` is computed three ways that share nothing below
the :class:`Matroid` type except the weights of the cycle itself:

* geometrically, by stable intersection with a generic tropical linear
  space of complementary dimension, using exact rational linear algebra;
* combinatorially, summing beta products over increasing flags, with beta
  taken from the subset-sum formula instead of basis activities;
* from the Tutte polynomial, ``(-1)^(d-k) t_(k+1,0)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .flags import FlagOfFlats, beta_product, increasing_flags
from .matroid import Matroid, MatroidError
from .tropical import (
    IntersectionPoint,
    WeightedFan,
    flag_fan,
    generic_linear_space,
    intersection_with_retries,
)
from .tutte import beta_subset_sum, tutte


class KOutOfRange(MatroidError):
    pass


@dataclass
class CsmCycle:
    matroid: Matroid
    k: int
    fan: WeightedFan
    dropped: list[FlagOfFlats] = field(default_factory=list)

    @property
    def sign(self) -> int:
        return (-1) ** (self.matroid.rank() - 1 - self.k)


def _check_k(M: Matroid, k: int) -> int:
    M.require_loopless()
    d = M.rank() - 1
    if not 0 <= k <= d:
        raise KOutOfRange(f"k = {k} outside 0..{d}")
    return d


def csm_cycle(M: Matroid, k: int) -> CsmCycle:
    d = _check_k(M, k)
    sign = (-1) ** (d - k)
    dropped = []

    def weight(flag):
        w = sign * beta_product(M, flag)
        if w == 0:
            dropped.append(flag)
        return w

    fan = flag_fan(M, k + 1, weight)
    return CsmCycle(M, k, fan, dropped)


def csm_intersection(M: Matroid, k: int, seed: int = 0,
                     chamber: str = "decreasing") -> list[IntersectionPoint]:
    cyc = csm_cycle(M, k)
    L = generic_linear_space(cyc.fan.ambient, k)
    _, pts = intersection_with_retries(cyc.fan, L, seed, chamber)
    return pts


def csm_degree_geometric(M: Matroid, k: int, seed: int = 0, chamber: str = "decreasing") -> int:
    return sum(p.multiplicity for p in csm_intersection(M, k, seed, chamber))


def csm_degree_combinatorial(M: Matroid, k: int) -> int:
    d = _check_k(M, k)
    total = sum(beta_product(M, f, beta_subset_sum) for f in increasing_flags(M, k + 1))
    return (-1) ** (d - k) * total


def csm_degree_tutte(M: Matroid, k: int) -> int:
    d = _check_k(M, k)
    return (-1) ** (d - k) * tutte(M)[k + 1, 0]


@dataclass
class VerificationRow:
    k: int
    seed: int
    geometric: int
    combinatorial: int
    tutte: int

    @property
    def passed(self) -> bool:
        return self.geometric == self.combinatorial == self.tutte

    def to_json(self) -> dict:
        return {"k": self.k, "seed": self.seed, "geometric": self.geometric,
                "combinatorial": self.combinatorial, "tutte": self.tutte, "pass": self.passed}


@dataclass
class VerificationReport:
    name: str
    rank: int
    rows: list[VerificationRow]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def to_json(self) -> dict:
        return {"matroid": self.name, "rank": self.rank, "rows": [r.to_json() for r in self.rows]}


def verify_main_theorem(M: Matroid, seeds: Sequence[int] = (0,),
                        chamber: str = "decreasing") -> VerificationReport:
    M.require_loopless()
    rows = []
    for k in range(M.rank()):
        comb = csm_degree_combinatorial(M, k)
        tut = csm_degree_tutte(M, k)
        for seed in seeds:
            rows.append(VerificationRow(k, seed, csm_degree_geometric(M, k, seed, chamber), comb, tut))
    return VerificationReport(M.name or "matroid", M.rank(), rows)
