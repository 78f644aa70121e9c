"""Flags of flats, the beta expansion of T(M; x, 0) and broken-circuit h-vectors."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Callable, Iterator, Sequence

from .matroid import Matroid, MatroidError, elements_of, popcount, set_str, submasks
from .tutte import bases_with_activity, beta


@dataclass(frozen=True)
class FlagOfFlats:
    """A chain ``0 = F_0 < F_1 < ... < F_k = E`` of flats stored as masks."""

    flats: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.flats) - 1

    @property
    def intermediate(self) -> tuple[int, ...]:
        return self.flats[1:-1]

    @property
    def deltas(self) -> list[int]:
        return [hi & ~lo for lo, hi in zip(self.flats, self.flats[1:])]

    def steps(self) -> list[tuple[int, int]]:
        return list(zip(self.flats, self.flats[1:]))

    def is_increasing(self, order: Sequence[int] | None = None) -> bool:
        pos = _positions(order)
        mins = [min(pos(e) for e in elements_of(d)) for d in self.deltas]
        return all(a < b for a, b in zip(mins, mins[1:]))

    def check(self, M: Matroid) -> None:
        fl = self.flats
        if not fl or fl[0] != 0 or fl[-1] != M.ground:
            raise MatroidError(f"flag {self} does not run from the empty set to the ground set")
        for lo, hi in zip(fl, fl[1:]):
            if lo & ~hi or lo == hi:
                raise MatroidError(f"flag {self} is not strictly increasing")
        for F in fl:
            if not M.is_flat(F):
                raise MatroidError(f"{set_str(F)} is not a flat")

    def __str__(self):
        return " ⊂ ".join("∅" if F == 0 else set_str(F) for F in self.flats)

    def to_json(self) -> list[list[int]]:
        return [elements_of(F) for F in self.flats]

    @classmethod
    def from_json(cls, doc) -> "FlagOfFlats":
        return cls(tuple(sum(1 << e for e in F) for F in doc))


@dataclass(frozen=True)
class GLVWitness:
    flag: FlagOfFlats
    basis_tuple: tuple[int, ...]


def _positions(order):
    if order is None:
        return lambda e: e
    pos = {e: i for i, e in enumerate(order)}
    return pos.__getitem__


def _flats_above(M: Matroid) -> dict[int, list[int]]:
    flats = M.flats()
    return {F: [G for G in flats if G != F and F & ~G == 0] for F in flats}


def _walk(M: Matroid, k: int, increasing: bool, order) -> Iterator[FlagOfFlats]:
    M.require_loopless()
    if k < 1:
        return
    pos = _positions(order)
    above = _flats_above(M)
    E = M.ground

    def delta_min(lo, hi):
        return min(pos(e) for e in elements_of(hi & ~lo))

    def extend(chain, last_min):
        F = chain[-1]
        steps_left = k - (len(chain) - 1)
        if steps_left == 1:
            if not increasing or delta_min(F, E) > last_min:
                yield FlagOfFlats(tuple(chain) + (E,))
            return
        for G in above[F]:
            if G == E:
                continue
            m = delta_min(F, G)
            if increasing and m <= last_min:
                continue
            chain.append(G)
            yield from extend(chain, m)
            chain.pop()

    yield from extend([0], -1)


def proper_flags(M: Matroid, k: int) -> list[FlagOfFlats]:
    """All proper flags with exactly ``k`` steps (``k - 1`` intermediate flats)."""
    return sorted(_walk(M, k, False, None), key=lambda f: f.flats)


def increasing_flags(M: Matroid, k: int, order: Sequence[int] | None = None) -> list[FlagOfFlats]:
    return sorted(_walk(M, k, True, order), key=lambda f: f.flats)


def step_minors(M: Matroid, flag: FlagOfFlats) -> list[Matroid]:
    return [M.minor_interval(lo, hi) for lo, hi in flag.steps()]


def beta_product(M: Matroid, flag: FlagOfFlats,
                 beta_fn: Callable[[Matroid], int] = beta) -> int:
    out = 1
    for minor in step_minors(M, flag):
        out *= beta_fn(minor)
        if not out:
            break
    return out


def beta_expansion(M: Matroid, order: Sequence[int] | None = None,
                   beta_fn: Callable[[Matroid], int] = beta) -> list[int]:
    """Coefficients (lowest degree first) of the increasing-flag sum for T(M; x, 0)."""
    M.require_loopless()
    coeffs = [0] * (M.rank() + 1)
    for k in range(1, M.rank() + 1):
        coeffs[k] = sum(beta_product(M, f, beta_fn) for f in increasing_flags(M, k, order))
    return coeffs


def glv_witnesses(M: Matroid, k: int, order: Sequence[int] | None = None) -> Iterator[GLVWitness]:
    """Pairs of an increasing k-step flag and a tuple of (1, 0)-active bases of its step minors."""
    for flag in increasing_flags(M, k, order):
        strata = [sorted(bases_with_activity(minor, 1, 0, order)) for minor in step_minors(M, flag)]
        for combo in itertools.product(*strata):
            yield GLVWitness(flag, combo)


def glv_count(M: Matroid, k: int, order: Sequence[int] | None = None) -> int:
    M.require_loopless()
    if not 1 <= k <= M.rank():
        raise MatroidError(f"k must lie in 1..{M.rank()}")
    return sum(1 for _ in glv_witnesses(M, k, order))


def broken_circuits(M: Matroid, order: Sequence[int] | None = None) -> list[int]:
    pos = _positions(order)
    out = set()
    for C in M.circuits:
        first = min(elements_of(C), key=pos)
        out.add(C & ~(1 << first))
    return sorted(out)


def nbc_faces(M: Matroid, order: Sequence[int] | None = None) -> list[int]:
    bcs = broken_circuits(M, order)
    return [S for S in submasks(M.ground) if not any(S & b == b for b in bcs)]


def broken_circuit_h_vector(M: Matroid, order: Sequence[int] | None = None) -> list[int]:
    """h-vector ``(h_0, ..., h_r)`` of the broken circuit complex, ``r`` the rank."""
    M.require_loopless()
    r = M.rank()
    f = [0] * (r + 1)
    for S in nbc_faces(M, order):
        f[popcount(S)] += 1
    return [
        sum((-1) ** (i - j) * comb(r - j, i - j) * f[j] for j in range(i + 1))
        for i in range(r + 1)
    ]
