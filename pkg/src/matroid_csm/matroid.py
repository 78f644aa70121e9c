"""Matroids stored as an explicit family of bases over bitmask subsets.

Elements are small non-negative integers and a subset is an ``int`` whose
bit ``e`` is set when ``e`` belongs to it.  Minors keep the labels of the
parent matroid, so orders on the parent restrict to them unchanged.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

MAX_GROUND = 16


class MatroidError(ValueError):
    pass


class EmptyBases(MatroidError):
    pass


class UnequalCardinality(MatroidError):
    pass


class ExchangeAxiomViolation(MatroidError):
    def __init__(self, b1: int, b2: int, e: int):
        self.witness = (b1, b2, e)
        super().__init__(
            f"exchange axiom fails: removing {e} from {set_str(b1)} admits no "
            f"replacement from {set_str(b2)}"
        )


class RankOutOfRange(MatroidError):
    pass


class NonPrimeModulus(MatroidError):
    pass


class ZeroMatrix(MatroidError):
    pass


class NotNested(MatroidError):
    pass


class LoopPresent(MatroidError):
    def __init__(self, loops: int):
        self.loops = loops
        super().__init__(
            f"matroid has loops {set_str(loops)}; this computation needs a loopless matroid"
        )


# -- bitmask helpers ---------------------------------------------------------

def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        if e < 0:
            raise MatroidError(f"negative element {e}")
        m |= 1 << e
    return m


def elements_of(mask: int) -> list[int]:
    out = []
    e = 0
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    """Smallest element of a nonempty mask."""
    return (mask & -mask).bit_length() - 1


def set_str(mask: int) -> str:
    return "{" + ",".join(map(str, elements_of(mask))) + "}"


def submasks(mask: int):
    """All subsets of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


# -- the matroid type --------------------------------------------------------

class Matroid:
    """An immutable matroid on the element set ``ground`` (a bitmask).

    ``bases`` is a frozenset of bitmasks.  Construct through
    :meth:`from_bases` or the other factories; the bare constructor does not
    validate the exchange axiom.
    """

    def __init__(self, ground: int, bases: Iterable[int], name: str | None = None):
        self.ground = ground
        self.bases = frozenset(bases)
        self.name = name
        if not self.bases:
            raise EmptyBases("a matroid needs at least one basis")
        sizes = {popcount(b) for b in self.bases}
        if len(sizes) != 1:
            raise UnequalCardinality(f"bases have sizes {sorted(sizes)}")
        for b in self.bases:
            if b & ~ground:
                raise MatroidError(f"basis {set_str(b)} is not inside the ground set")
        self._rank_cache: dict[int, int] = {}

    # factories

    @classmethod
    def from_bases(cls, ground_size: int, bases: Iterable[Iterable[int]],
                   name: str | None = None) -> "Matroid":
        if not 1 <= ground_size <= MAX_GROUND:
            raise MatroidError(f"ground size must be between 1 and {MAX_GROUND}")
        masks = [mask_of(b) for b in bases]
        if masks and not any(masks):
            raise RankOutOfRange("rank must be positive")
        M = cls((1 << ground_size) - 1, masks, name)
        M.check_exchange()
        return M

    def check_exchange(self) -> None:
        bases = self.bases
        for b1 in bases:
            for b2 in bases:
                diff = b1 & ~b2
                if not diff:
                    continue
                for e in elements_of(diff):
                    rest = b1 & ~(1 << e)
                    if not any(rest | (1 << f) in bases for f in elements_of(b2 & ~b1)):
                        raise ExchangeAxiomViolation(b1, b2, e)

    # basic data

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.ground == other.ground and self.bases == other.bases

    def __hash__(self):
        return hash((self.ground, self.bases))

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return (f"<Matroid{label} on {set_str(self.ground)}, rank {self.rank()}, "
                f"{len(self.bases)} bases>")

    @property
    def elements(self) -> list[int]:
        return elements_of(self.ground)

    @property
    def size(self) -> int:
        return popcount(self.ground)

    @cached_property
    def full_rank(self) -> int:
        return popcount(next(iter(self.bases)))

    def rank(self, S: int | None = None) -> int:
        if S is None:
            return self.full_rank
        S &= self.ground
        r = self._rank_cache.get(S)
        if r is None:
            r = max(popcount(b & S) for b in self.bases)
            self._rank_cache[S] = r
        return r

    def closure(self, S: int) -> int:
        r = self.rank(S)
        cl = S & self.ground
        for e in elements_of(self.ground & ~S):
            if self.rank(S | (1 << e)) == r:
                cl |= 1 << e
        return cl

    def is_flat(self, S: int) -> bool:
        return self.closure(S) == S

    @cached_property
    def _flats_by_rank(self) -> list[list[int]]:
        layers = [[self.closure(0)]]
        for _ in range(self.full_rank):
            nxt = set()
            for F in layers[-1]:
                for e in elements_of(self.ground & ~F):
                    nxt.add(self.closure(F | (1 << e)))
            layers.append(sorted(nxt))
        return layers

    def flats(self, r: int | None = None) -> list[int]:
        if r is None:
            return [F for layer in self._flats_by_rank for F in layer]
        if not 0 <= r <= self.full_rank:
            return []
        return list(self._flats_by_rank[r])

    @cached_property
    def loops(self) -> int:
        covered = 0
        for b in self.bases:
            covered |= b
        return self.ground & ~covered

    @cached_property
    def coloops(self) -> int:
        common = self.ground
        for b in self.bases:
            common &= b
        return common

    @property
    def is_loopless(self) -> bool:
        return self.loops == 0

    def require_loopless(self) -> None:
        if self.loops:
            raise LoopPresent(self.loops)

    @cached_property
    def circuits(self) -> list[int]:
        # every circuit is the fundamental circuit of some basis
        found = set()
        for b in self.bases:
            for e in elements_of(self.ground & ~b):
                c = 1 << e
                for f in elements_of(b):
                    if (b | (1 << e)) & ~(1 << f) in self.bases:
                        c |= 1 << f
                found.add(c)
        return sorted(found, key=lambda c: (popcount(c), c))

    def cocircuits(self) -> list[int]:
        return self.dual().circuits

    def dual(self) -> "Matroid":
        name = f"dual({self.name})" if self.name else None
        return Matroid(self.ground, (self.ground & ~b for b in self.bases), name)

    def components(self) -> list[int]:
        """Connected components, as masks, sorted by smallest element."""
        parent = {e: e for e in self.elements}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for c in self.circuits:
            els = elements_of(c)
            for e in els[1:]:
                parent[find(e)] = find(els[0])
        comps: dict[int, int] = {}
        for e in self.elements:
            comps[find(e)] = comps.get(find(e), 0) | (1 << e)
        return sorted(comps.values(), key=lowest)

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def restrict(self, S: int) -> "Matroid":
        return self.minor_interval(0, S & self.ground)

    def contract(self, S: int) -> "Matroid":
        return self.minor_interval(S & self.ground, self.ground)

    def delete(self, S: int) -> "Matroid":
        return self.restrict(self.ground & ~S)

    def minor_interval(self, lo: int, hi: int) -> "Matroid":
        """The minor ``M|hi / lo`` on ``hi - lo`` with labels kept."""
        if lo & ~hi or hi & ~self.ground:
            raise NotNested(f"{set_str(lo)} is not contained in {set_str(hi)} within the ground set")
        r_lo, r_hi = self.rank(lo), self.rank(hi)
        new_ground = hi & ~lo
        bases = {
            b & new_ground
            for b in self.bases
            if popcount(b & hi) == r_hi and popcount(b & lo) == r_lo
        }
        return Matroid(new_ground, bases)

    def relabel(self, perm: Sequence[int]) -> "Matroid":
        """Image under the element map ``e -> perm[e]``."""
        def image(mask):
            return mask_of(perm[e] for e in elements_of(mask))
        return Matroid(image(self.ground), (image(b) for b in self.bases), self.name)

    def sorted_bases(self) -> list[list[int]]:
        return sorted(elements_of(b) for b in self.bases)


EMPTY = Matroid(0, [0], "empty")


# -- constructors ------------------------------------------------------------

def uniform(rank: int, size: int) -> Matroid:
    if not 1 <= rank <= size <= MAX_GROUND:
        raise RankOutOfRange(f"need 1 <= rank <= size <= {MAX_GROUND}, got rank {rank}, size {size}")
    bases = (mask_of(c) for c in itertools.combinations(range(size), rank))
    return Matroid((1 << size) - 1, bases, f"U({rank},{size})")


def from_graph(vertex_count: int, edges: Sequence[Sequence[int]],
               name: str | None = None) -> Matroid:
    """Cycle matroid of a multigraph; edge ``i`` of the list is element ``i``."""
    m = len(edges)
    if not 1 <= m <= MAX_GROUND:
        raise MatroidError(f"need between 1 and {MAX_GROUND} edges")
    for u, w in edges:
        if not (0 <= u < vertex_count and 0 <= w < vertex_count):
            raise MatroidError(f"edge ({u},{w}) uses a vertex outside 0..{vertex_count - 1}")

    def forest_rank(idx):
        parent = list(range(vertex_count))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        r = 0
        for i in idx:
            a, b = find(edges[i][0]), find(edges[i][1])
            if a != b:
                parent[a] = b
                r += 1
        return r

    r = forest_rank(range(m))
    bases = [mask_of(c) for c in itertools.combinations(range(m), r) if forest_rank(c) == r]
    return Matroid((1 << m) - 1, bases, name)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % q for q in range(2, int(p ** 0.5) + 1))


def column_rank(columns: Sequence[Sequence[int]], p: int = 0) -> int:
    """Rank of a set of integer column vectors over Q (``p == 0``) or GF(p)."""
    if not columns:
        return 0
    rows = [list(col) for col in columns]  # rank of transpose is the same
    if p:
        rows = [[x % p for x in row] for row in rows]
    else:
        rows = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(rows[0])
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        inv = pow(pr[c], -1, p) if p else 1 / pr[c]
        for i in range(rank + 1, len(rows)):
            f = rows[i][c]
            if f:
                f = f * inv
                rows[i] = [(a - f * b) % p if p else a - f * b for a, b in zip(rows[i], pr)]
        rank += 1
    return rank


def from_matrix(p: int, matrix: Sequence[Sequence[int]], name: str | None = None) -> Matroid:
    """Column matroid of an integer matrix over Q (``p == 0``) or GF(p)."""
    if p and not _is_prime(p):
        raise NonPrimeModulus(f"{p} is not prime")
    if not matrix or not matrix[0]:
        raise MatroidError("empty matrix")
    ncols = len(matrix[0])
    if any(len(row) != ncols for row in matrix):
        raise MatroidError("ragged matrix")
    if ncols > MAX_GROUND:
        raise MatroidError(f"at most {MAX_GROUND} columns supported")
    cols = [[row[j] for row in matrix] for j in range(ncols)]
    r = column_rank(cols, p)
    if r == 0:
        raise ZeroMatrix("matrix has rank 0 over the chosen field")
    bases = [mask_of(c) for c in itertools.combinations(range(ncols), r)
             if column_rank([cols[j] for j in c], p) == r]
    return Matroid((1 << ncols) - 1, bases, name)


def direct_sum(M1: Matroid, M2: Matroid, name: str | None = None) -> Matroid:
    """Direct sum with ``M2``'s elements shifted past those of ``M1``."""
    shift = M1.ground.bit_length()
    ground = M1.ground | (M2.ground << shift)
    bases = (b1 | (b2 << shift) for b1 in M1.bases for b2 in M2.bases)
    return Matroid(ground, bases, name)
