"""Exact integer and rational linear algebra on small dense matrices.

Matrices are lists of rows.  Nothing here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


class RankDeficient(ArithmeticError):
    pass


def transpose(rows: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*rows)]


def det_int(A: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(row) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        pk = M[k][k]
        rk = M[k]
        for i in range(k + 1, n):
            ri = M[i]
            f = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pk * ri[j] - f * rk[j]) // prev
        prev = pk
    return sign * M[n - 1][n - 1]


def solve_int(A: Sequence[Sequence[int]], b: Sequence[int]):
    """Solve ``A x = b`` for square integer ``A``.

    Returns ``(numerators, denominator)`` with ``x = numerators / denominator``
    and a positive denominator, or ``None`` when ``A`` is singular.
    """
    n = len(A)
    M = [list(row) + [rhs] for row, rhs in zip(A, b)]
    prev = 1
    for k in range(n):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return None
            M[k], M[swap] = M[swap], M[k]
        pk = M[k][k]
        rk = M[k]
        for i in range(k + 1, n):
            ri = M[i]
            f = ri[k]
            for j in range(k + 1, n + 1):
                ri[j] = (pk * ri[j] - f * rk[j]) // prev
            ri[k] = 0
        prev = pk
    if n == 0:
        return [], 1
    # D = M[n-1][n-1] is +-det(A); D * x is integral by Cramer's rule
    D = M[n - 1][n - 1]
    y = [0] * n
    for i in range(n - 1, -1, -1):
        row = M[i]
        s = D * row[n]
        for j in range(i + 1, n):
            if row[j]:
                s -= row[j] * y[j]
        y[i] = s // row[i]
    if D < 0:
        return [-c for c in y], -D
    return y, D


def solve_q(A: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """Solve a square rational system, or ``None`` if singular."""
    n = len(A)
    M = [[Fraction(v) for v in row] + [Fraction(rhs)] for row, rhs in zip(A, b)]
    for k in range(n):
        piv = next((i for i in range(k, n) if M[i][k]), None)
        if piv is None:
            return None
        M[k], M[piv] = M[piv], M[k]
        inv = 1 / M[k][k]
        M[k] = [v * inv for v in M[k]]
        for i in range(n):
            if i != k and M[i][k]:
                f = M[i][k]
                M[i] = [a - f * c for a, c in zip(M[i], M[k])]
    return [M[i][n] for i in range(n)]


def rank_q(rows: Sequence[Sequence]) -> int:
    M = [[Fraction(v) for v in row] for row in rows]
    if not M:
        return 0
    rank = 0
    for c in range(len(M[0])):
        piv = next((i for i in range(rank, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for i in range(rank + 1, len(M)):
            if M[i][c]:
                f = M[i][c] / M[rank][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[rank])]
        rank += 1
    return rank


def in_rational_span(vectors: Sequence[Sequence], w: Sequence) -> bool:
    if not any(w):
        return True
    return rank_q(list(vectors) + [list(w)]) == rank_q(vectors)


def least_solution(vectors: Sequence[Sequence], w: Sequence) -> list[Fraction] | None:
    """Coefficients ``a`` with ``sum a_i vectors[i] = w`` for independent ``vectors``."""
    k = len(vectors)
    if k == 0:
        return [] if not any(w) else None
    cols = transpose(vectors)  # len(w) rows, k columns
    M = [[Fraction(v) for v in row] + [Fraction(rhs)] for row, rhs in zip(cols, w)]
    rank = 0
    for c in range(k):
        piv = next((i for i in range(rank, len(M)) if M[i][c]), None)
        if piv is None:
            raise RankDeficient("vectors are linearly dependent")
        M[rank], M[piv] = M[piv], M[rank]
        inv = 1 / M[rank][c]
        M[rank] = [v * inv for v in M[rank]]
        for i in range(len(M)):
            if i != rank and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[rank])]
        rank += 1
    if any(M[i][k] for i in range(rank, len(M))):
        return None
    return [M[i][k] for i in range(k)]


def smith_invariants(A: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors of an integer matrix, in divisibility order."""
    M = [list(row) for row in A]
    if not M or not M[0]:
        return []
    rows, cols = len(M), len(M[0])
    out = []
    t = 0
    while t < min(rows, cols):
        # pick the smallest nonzero entry of the remaining block as pivot
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if M[i][j] and (best is None or abs(M[i][j]) < abs(M[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        M[t], M[i] = M[i], M[t]
        for row in M:
            row[t], row[j] = row[j], row[t]
        done = False
        while not done:
            done = True
            p = M[t][t]
            for i in range(t + 1, rows):
                q = M[i][t] // p
                if q:
                    M[i] = [a - q * b for a, b in zip(M[i], M[t])]
                if M[i][t]:
                    M[t], M[i] = M[i], M[t]
                    done = False
                    break
            if not done:
                continue
            for j in range(t + 1, cols):
                q = M[t][j] // p
                if q:
                    for row in M:
                        row[j] -= q * row[t]
                if M[t][j]:
                    for row in M:
                        row[t], row[j] = row[j], row[t]
                    done = False
                    break
            if not done:
                continue
            # divisibility: fold any entry not divisible by the pivot into row t
            for i in range(t + 1, rows):
                bad = next((j for j in range(t + 1, cols) if M[i][j] % p), None)
                if bad is not None:
                    M[t] = [a + b for a, b in zip(M[t], M[i])]
                    done = False
                    break
        out.append(abs(M[t][t]))
        t += 1
    return out


def is_saturated(vectors: Sequence[Sequence[int]]) -> bool:
    """True iff the integer vectors are a basis of a saturated sublattice."""
    if not vectors:
        return True
    inv = smith_invariants(vectors)
    return len(inv) == len(vectors) and all(d == 1 for d in inv)


def lattice_index(basis_a: Sequence[Sequence[int]], basis_b: Sequence[Sequence[int]]) -> int:
    """Index ``[Z^n : L_a + L_b]`` for lattice bases whose sizes add up to ``n``."""
    vecs = list(basis_a) + list(basis_b)
    n = len(vecs[0]) if vecs else 0
    if len(vecs) != n:
        raise ValueError(f"{len(vecs)} vectors supplied in dimension {n}")
    d = det_int(vecs)
    if d == 0:
        raise RankDeficient("combined vectors are linearly dependent")
    return abs(d)
