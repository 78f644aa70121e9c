import itertools
from fractions import Fraction
from functools import reduce
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from matroid_csm.linalg import (
    RankDeficient,
    det_int,
    in_rational_span,
    is_saturated,
    lattice_index,
    least_solution,
    rank_q,
    smith_invariants,
    solve_int,
    solve_q,
)

from conftest import leibniz_det

small_ints = st.integers(-4, 4)


def square(n):
    return st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=n, max_size=n)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 5).flatmap(square))
def test_det_matches_leibniz(A):
    assert det_int(A) == leibniz_det(A)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(square(n), st.lists(small_ints, min_size=n, max_size=n))))
def test_solve_int_by_substitution(Ab):
    A, b = Ab
    sol = solve_int(A, b)
    if leibniz_det(A) == 0:
        assert sol is None and solve_q(A, b) is None
        return
    nums, den = sol
    assert den > 0
    for row, rhs in zip(A, b):
        assert sum(a * x for a, x in zip(row, nums)) == rhs * den
    assert [Fraction(x, den) for x in nums] == solve_q(A, b)


def determinantal_divisors(A):
    """gcd of all i-by-i minors, the classical route to invariant factors."""
    rows, cols = len(A), len(A[0])
    out = []
    for i in range(1, min(rows, cols) + 1):
        minors = [
            leibniz_det([[A[r][c] for c in cs] for r in rs])
            for rs in itertools.combinations(range(rows), i)
            for cs in itertools.combinations(range(cols), i)
        ]
        g = reduce(gcd, minors, 0)
        if g == 0:
            break
        out.append(g)
    return out


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 3).flatmap(lambda r: st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(small_ints, min_size=c, max_size=c), min_size=r, max_size=r))))
def test_smith_against_minors(A):
    inv = smith_invariants(A)
    d = determinantal_divisors(A)
    assert len(inv) == len(d) == rank_q(A)
    prev = 1
    for k, dk in enumerate(d):
        assert inv[k] == dk // prev
        prev = dk
    for a, b in zip(inv, inv[1:]):
        assert b % a == 0


def test_known_smith():
    assert smith_invariants([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]
    assert not is_saturated([[2, 0]])
    assert is_saturated([[1, 1, 0], [0, 1, 1]])


def test_lattice_index():
    e = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    assert lattice_index(e[:1], e[1:]) == 1
    assert lattice_index([[2, 0]], [[0, 1]]) == 2
    with pytest.raises(RankDeficient):
        lattice_index([[1, 1]], [[2, 2]])
    with pytest.raises(ValueError):
        lattice_index([[1, 0]], [])


def test_span_and_solution():
    assert in_rational_span([[1, 0, 1]], [2, 0, 2])
    assert not in_rational_span([[1, 0, 1]], [1, 1, 1])
    assert in_rational_span([], [0, 0])
    assert least_solution([[1, 0, 1], [0, 1, 0]], [3, Fraction(1, 2), 3]) == [3, Fraction(1, 2)]
    assert least_solution([[1, 0, 1]], [1, 1, 1]) is None
