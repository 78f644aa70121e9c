"""Weighted simplicial fans in Z^(n+1) / Z(1,...,1), Bergman fans and stable intersection.

Quotient classes are written in the coordinates ``x_e - x_0`` for
``e = 1..n``, which identifies the quotient lattice with ``Z^n``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Sequence

from .flags import FlagOfFlats, proper_flags
from .linalg import (
    in_rational_span,
    is_saturated,
    lattice_index,
    least_solution,
    solve_int,
)
from .matroid import Matroid, MatroidError, uniform


class FanError(ValueError):
    pass


class DimensionMismatch(FanError):
    pass


class VDegenerate(ArithmeticError):
    """The perturbation vector lies on a wall of some cone pair."""


# -- quotient coordinates ----------------------------------------------------

def canonical(lift: Sequence) -> tuple:
    """Quotient class of a vector in ``Z^(n+1)`` or ``Q^(n+1)``."""
    x0 = lift[0]
    return tuple(x - x0 for x in lift[1:])


def lift(x: Sequence) -> tuple:
    """The representative with coordinate 0 in position 0."""
    return (0,) + tuple(x)


def flat_ray(F: int, n: int) -> tuple[int, ...]:
    """Quotient image of the indicator vector of ``F`` inside ``{0..n}``."""
    return canonical([(F >> e) & 1 for e in range(n + 1)])


# -- cones and fans ----------------------------------------------------------

@dataclass(frozen=True)
class Cone:
    rays: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.rays)

    @classmethod
    def checked(cls, rays: Iterable[Sequence[int]]) -> "Cone":
        rays = tuple(tuple(int(v) for v in r) for r in rays)
        if rays and not is_saturated(rays):
            raise FanError(f"rays {rays} are not a basis of a saturated lattice")
        return cls(rays)

    def contains(self, x: Sequence) -> bool:
        coeffs = least_solution(self.rays, x)
        return coeffs is not None and all(c >= 0 for c in coeffs)


@dataclass(frozen=True)
class WeightedCone:
    cone: Cone
    weight: int
    flag: FlagOfFlats | None = None


@dataclass
class WeightedFan:
    """A pure fan listed by its maximal cones, each carrying a nonzero weight."""

    ambient: int
    dim: int
    cones: list[WeightedCone] = field(default_factory=list)

    def __post_init__(self):
        self.cones = [c for c in self.cones if c.weight != 0]
        for c in self.cones:
            if c.cone.dim != self.dim:
                raise FanError(f"cone of dimension {c.cone.dim} in a fan of dimension {self.dim}")
            if any(len(r) != self.ambient for r in c.cone.rays):
                raise FanError("ray length does not match the ambient dimension")

    def __len__(self):
        return len(self.cones)

    def weights(self) -> dict[frozenset, int]:
        return {frozenset(c.cone.rays): c.weight for c in self.cones}

    def sorted_cones(self) -> list[WeightedCone]:
        return sorted(self.cones, key=lambda c: sorted(c.cone.rays))

    def contains(self, x: Sequence) -> bool:
        return any(c.cone.contains(x) for c in self.cones)

    def to_json(self) -> dict:
        return {
            "ambient": self.ambient,
            "dim": self.dim,
            "cones": [
                {"rays": [list(r) for r in sorted(c.cone.rays)], "weight": c.weight}
                for c in self.sorted_cones()
            ],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "WeightedFan":
        try:
            ambient, dim = int(doc["ambient"]), int(doc["dim"])
            cones = [WeightedCone(Cone.checked(c["rays"]), int(c["weight"])) for c in doc["cones"]]
        except (KeyError, TypeError) as exc:
            raise FanError(f"malformed fan document: {exc}") from exc
        return cls(ambient, dim, cones)


def cone_of_flag(flag: FlagOfFlats, n: int) -> Cone:
    """Cone spanned by the images of the intermediate flats of ``flag``."""
    full = (1 << (n + 1)) - 1
    if not flag.flats or flag.flats[0] != 0 or flag.flats[-1] != full:
        raise MatroidError(f"{flag} is not a proper flag on {{0..{n}}}")
    return Cone.checked(flat_ray(F, n) for F in flag.intermediate)


def _ambient(M: Matroid) -> int:
    n = M.size - 1
    if M.ground != (1 << (n + 1)) - 1:
        raise MatroidError("fans need a matroid on the ground set {0..n}")
    return n


def flag_fan(M: Matroid, steps: int, weight=None) -> WeightedFan:
    """Fan of cones of proper flags with ``steps`` steps, weighted by ``weight(flag)``."""
    n = _ambient(M)
    cones = []
    for flag in proper_flags(M, steps):
        w = 1 if weight is None else weight(flag)
        cones.append(WeightedCone(cone_of_flag(flag, n), w, flag))
    return WeightedFan(n, steps - 1, cones)


def bergman_fan(M: Matroid) -> WeightedFan:
    M.require_loopless()
    return flag_fan(M, M.rank())


@lru_cache(maxsize=64)
def generic_linear_space(n: int, k: int) -> WeightedFan:
    """Bergman fan of the uniform matroid of rank ``n - k + 1`` on ``{0..n}``."""
    if not 0 <= k <= n:
        raise FanError(f"codimension {k} out of range for ambient dimension {n}")
    return bergman_fan(uniform(n - k + 1, n + 1))


def uniform_membership(x: Sequence, r: int) -> bool:
    """Whether ``x`` lies in the Bergman fan of the rank ``r`` uniform matroid."""
    full = lift(x)
    m = min(full)
    support = sum(1 for v in full if v != m)
    return support <= r - 1


# -- balancing ---------------------------------------------------------------

@dataclass
class RidgeFailure:
    ridge: tuple[tuple[int, ...], ...]
    residual: tuple[int, ...]


@dataclass
class BalancingReport:
    ridges_checked: int
    failures: list[RidgeFailure]

    @property
    def balanced(self) -> bool:
        return not self.failures


def balancing_check(fan: WeightedFan) -> BalancingReport:
    if fan.dim == 0:
        return BalancingReport(0, [])
    sums: dict[frozenset, list[int]] = {}
    for wc in fan.cones:
        rays = wc.cone.rays
        for out in range(len(rays)):
            ridge = frozenset(rays[:out] + rays[out + 1:])
            acc = sums.setdefault(ridge, [0] * fan.ambient)
            u = rays[out]
            for i in range(fan.ambient):
                acc[i] += wc.weight * u[i]
    failures = []
    for ridge, total in sums.items():
        if not in_rational_span(list(ridge), total):
            failures.append(RidgeFailure(tuple(sorted(ridge)), tuple(total)))
    failures.sort(key=lambda f: f.ridge)
    return BalancingReport(len(sums), failures)


# -- stable intersection -----------------------------------------------------

@dataclass(frozen=True)
class IntersectionPoint:
    point: tuple[Fraction, ...]
    multiplicity: int
    index: int
    cone: WeightedCone
    partner: WeightedCone


def perturbation(n: int, seed: int = 0, chamber: str = "decreasing") -> tuple[Fraction, ...]:
    """A generic vector in quotient coordinates.

    ``"decreasing"`` lifts to ``v_0 > v_1 > ... > v_n`` (integer steps plus
    small distinct random rationals); ``"random"`` draws every coordinate.
    """
    rng = random.Random(seed)
    if chamber == "decreasing":
        jitter = rng.sample(range(1, 10 ** 9), n + 1)
        v = [Fraction(n + 1 - e) + Fraction(j, 10 ** 10) for e, j in enumerate(jitter)]
    elif chamber == "random":
        v = [Fraction(rng.randrange(-10 ** 9, 10 ** 9), 10 ** 6) for _ in range(n + 1)]
    else:
        raise ValueError(f"unknown chamber {chamber!r}")
    return canonical(v)


def stable_intersection_points(T: WeightedFan, T2: WeightedFan,
                               v: Sequence[Fraction]) -> list[IntersectionPoint]:
    """Points of ``|T| ∩ (|T2| + v)`` with multiplicities, for complementary dimensions."""
    n = T.ambient
    if T2.ambient != n or T.dim + T2.dim != n:
        raise DimensionMismatch(
            f"dimensions {T.dim} + {T2.dim} in ambient {T.ambient}/{T2.ambient} are not complementary"
        )
    v = [Fraction(x) for x in v]
    scale = lcm(*(x.denominator for x in v)) if v else 1
    rhs = [int(x * scale) for x in v]
    points = []
    for wc in T.cones:
        rays = wc.cone.rays
        k = len(rays)
        for wc2 in T2.cones:
            cols = list(rays) + [tuple(-c for c in s) for s in wc2.cone.rays]
            A = [[col[i] for col in cols] for i in range(n)]
            sol = solve_int(A, rhs)
            if sol is None:
                continue
            nums, _ = sol
            if any(c == 0 for c in nums):
                raise VDegenerate("perturbation lies on a wall of a transverse cone pair")
            if any(c < 0 for c in nums):
                continue
            a = [Fraction(c, sol[1] * scale) for c in nums[:k]]
            p = tuple(sum((a[i] * rays[i][j] for i in range(k)), Fraction(0)) for j in range(n))
            idx = lattice_index(rays, wc2.cone.rays)
            points.append(IntersectionPoint(p, wc.weight * wc2.weight * idx, idx, wc, wc2))
    return points


def intersection_with_retries(T: WeightedFan, T2: WeightedFan, seed: int = 0,
                              chamber: str = "decreasing", retries: int = 10):
    for attempt in range(retries):
        v = perturbation(T.ambient, seed + 7919 * attempt, chamber)
        try:
            return v, stable_intersection_points(T, T2, v)
        except VDegenerate:
            continue
    raise VDegenerate(f"no generic perturbation found after {retries} attempts")


def degree(T: WeightedFan, seed: int = 0, chamber: str = "decreasing") -> int:
    """Weighted count of the stable intersection with a generic linear space."""
    L = generic_linear_space(T.ambient, T.dim)
    _, pts = intersection_with_retries(T, L, seed, chamber)
    return sum(p.multiplicity for p in pts)


def intersection_report(points: Sequence[IntersectionPoint]) -> dict:
    return {
        "points": [
            {"coords": [str(c) for c in p.point], "mult": p.multiplicity}
            for p in sorted(points, key=lambda p: p.point)
        ],
        "degree": sum(p.multiplicity for p in points),
    }

