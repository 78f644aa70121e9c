"""Basis activities, the Tutte polynomial and its one-variable specialisations."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Sequence

from .matroid import (
    LoopPresent,
    Matroid,
    MatroidError,
    elements_of,
    popcount,
    submasks,
)


class NotABasis(MatroidError):
    pass


class ElementInBasis(MatroidError):
    pass


class ElementNotInBasis(MatroidError):
    pass


class InexactDivision(ArithmeticError):
    pass


@dataclass(frozen=True)
class TuttePolynomial:
    """Sparse coefficient table ``{(i, j): t_ij}`` of ``sum t_ij x^i y^j``."""

    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {k: c for k, c in self.coeffs.items() if c}
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    def __getitem__(self, ij) -> int:
        return self.coeffs.get(ij, 0)

    def __eq__(self, other):
        if not isinstance(other, TuttePolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def __str__(self):
        return self.render()

    def total(self) -> int:
        return sum(self.coeffs.values())

    def x_degree(self) -> int:
        return max((i for i, _ in self.coeffs), default=0)

    def at_y_zero(self) -> list[int]:
        """Coefficients of ``T(x, 0)``, lowest degree first."""
        out = [0] * (self.x_degree() + 1)
        for (i, j), c in self.coeffs.items():
            if j == 0:
                out[i] += c
        return out

    def evaluate(self, x, y):
        return sum(c * x ** i * y ** j for (i, j), c in self.coeffs.items())

    def transpose(self) -> "TuttePolynomial":
        return TuttePolynomial({(j, i): c for (i, j), c in self.coeffs.items()})

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (i, j), c in sorted(self.coeffs.items(), key=lambda kv: (-kv[0][0], -kv[0][1])):
            mono = []
            if i:
                mono.append("x" if i == 1 else f"x^{i}")
            if j:
                mono.append("y" if j == 1 else f"y^{j}")
            body = "*".join(mono)
            if not body:
                parts.append(str(c))
            else:
                parts.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {"terms": [{"i": i, "j": j, "c": c} for (i, j), c in self.coeffs.items()]}

    @classmethod
    def from_json(cls, doc: dict) -> "TuttePolynomial":
        return cls({(t["i"], t["j"]): t["c"] for t in doc["terms"]})


@dataclass(frozen=True)
class ActivityRecord:
    basis: int
    internal: int
    external: int
    internally_active: int
    externally_active: int


def _positions(M: Matroid, order: Sequence[int] | None) -> dict[int, int]:
    if order is None:
        return {e: e for e in M.elements}
    pos = {e: i for i, e in enumerate(order)}
    missing = [e for e in M.elements if e not in pos]
    if missing or len(pos) != len(order):
        raise MatroidError(f"order {list(order)} is not a permutation covering {M.elements}")
    return pos


def _check_basis(M: Matroid, B: int) -> None:
    if B not in M.bases:
        raise NotABasis(f"{elements_of(B)} is not a basis")


def fundamental_circuit(M: Matroid, B: int, e: int) -> int:
    _check_basis(M, B)
    if B >> e & 1:
        raise ElementInBasis(f"{e} lies in the basis")
    grown = B | (1 << e)
    return sum(1 << f for f in elements_of(grown) if grown & ~(1 << f) in M.bases)


def fundamental_cocircuit(M: Matroid, B: int, e: int) -> int:
    _check_basis(M, B)
    if not B >> e & 1:
        raise ElementNotInBasis(f"{e} is not in the basis")
    shrunk = B & ~(1 << e)
    out = 1 << e
    for f in elements_of(M.ground & ~B):
        if shrunk | (1 << f) in M.bases:
            out |= 1 << f
    return out


def _min_by(mask: int, pos: dict[int, int]) -> int:
    return min(elements_of(mask), key=pos.__getitem__)


def activities(M: Matroid, B: int, order: Sequence[int] | None = None) -> ActivityRecord:
    pos = _positions(M, order)
    _check_basis(M, B)
    internal = 0
    for e in elements_of(B):
        if _min_by(fundamental_cocircuit(M, B, e), pos) == e:
            internal |= 1 << e
    external = 0
    for e in elements_of(M.ground & ~B):
        if _min_by(fundamental_circuit(M, B, e), pos) == e:
            external |= 1 << e
    return ActivityRecord(B, popcount(internal), popcount(external), internal, external)


def tutte(M: Matroid, order: Sequence[int] | None = None) -> TuttePolynomial:
    if order is None:
        return _tutte_natural(M)
    return _tutte_activities(M, tuple(order))


@lru_cache(maxsize=4096)
def _tutte_natural(M: Matroid) -> TuttePolynomial:
    return _tutte_activities(M, None)


def _tutte_activities(M: Matroid, order) -> TuttePolynomial:
    counts: dict = {}
    for B in M.bases:
        rec = activities(M, B, order)
        key = (rec.internal, rec.external)
        counts[key] = counts.get(key, 0) + 1
    return TuttePolynomial(counts)


def bases_with_activity(M: Matroid, i: int, j: int,
                        order: Sequence[int] | None = None) -> set[int]:
    """Bases with internal activity ``i`` and external activity ``j``."""
    out = set()
    for B in M.bases:
        rec = activities(M, B, order)
        if rec.internal == i and rec.external == j:
            out.add(B)
    return out


def beta(M: Matroid) -> int:
    """Crapo's beta invariant, read off as ``t_10``."""
    return tutte(M)[1, 0]


def beta_subset_sum(M: Matroid) -> int:
    """Beta invariant from ``(-1)^r(E) * sum_S (-1)^|S| r(S)``, without activities."""
    total = 0
    for S in submasks(M.ground):
        total += -M.rank(S) if popcount(S) & 1 else M.rank(S)
    return total if M.rank() % 2 == 0 else -total


def tutte_corank_nullity(M: Matroid) -> TuttePolynomial:
    """Subset expansion ``sum (x-1)^(r(E)-r(S)) (y-1)^(|S|-r(S))``."""
    rE = M.rank()
    by_exponent: dict = {}
    for S in submasks(M.ground):
        rS = M.rank(S)
        key = (rE - rS, popcount(S) - rS)
        by_exponent[key] = by_exponent.get(key, 0) + 1
    coeffs: dict = {}
    for (a, b), mult in by_exponent.items():
        for i in range(a + 1):
            ci = comb(a, i) * (-1) ** (a - i)
            for j in range(b + 1):
                cj = comb(b, j) * (-1) ** (b - j)
                coeffs[i, j] = coeffs.get((i, j), 0) + mult * ci * cj
    return TuttePolynomial(coeffs)


# -- integer polynomials in one variable, lowest degree first ----------------

def poly_trim(p: list[int]) -> list[int]:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_compose_linear(p: Sequence[int], a: int, b: int) -> list[int]:
    """Coefficients of ``p(a + b*q)``."""
    out = [0] * max(len(p), 1)
    for k, c in enumerate(p):
        if not c:
            continue
        for m in range(k + 1):
            out[m] += c * comb(k, m) * a ** (k - m) * b ** m
    return poly_trim(out)


def poly_divide_linear(p: Sequence[int], root: int) -> list[int]:
    """Exact quotient of ``p(q)`` by ``(q - root)``."""
    p = poly_trim(p)
    if not p:
        return []
    quotient = [0] * (len(p) - 1)
    carry = 0
    for k in range(len(p) - 1, 0, -1):
        carry = p[k] + carry * root
        quotient[k - 1] = carry
    remainder = p[0] + carry * root
    if remainder:
        raise InexactDivision(f"{list(p)} is not divisible by (q - {root})")
    return quotient


def reduced_char_poly(M: Matroid, shifted: bool = False) -> list[int]:
    """Reduced characteristic polynomial, coefficients lowest degree first.

    With ``shifted=True`` returns the coefficients of ``chi_bar(q + 1)``.
    """
    if M.size == 0:
        raise MatroidError("reduced characteristic polynomial needs a nonempty matroid")
    if M.loops:
        raise LoopPresent(M.loops)
    t = tutte(M).at_y_zero()
    sign = (-1) ** M.rank()
    if shifted:
        num = poly_compose_linear(t, 0, -1)
        quot = poly_divide_linear(num, 0)
    else:
        num = poly_compose_linear(t, 1, -1)
        quot = poly_divide_linear(num, 1)
    return [sign * c for c in quot]


def render_poly(p: Sequence[int], var: str = "q") -> str:
    terms = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        if not terms:
            terms.append(("-" if c < 0 else "") + body)
        else:
            terms.append(("- " if c < 0 else "+ ") + body)
    return " ".join(terms) if terms else "0"
