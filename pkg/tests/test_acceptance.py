"""Acceptance criteria, one test each; every test records a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` (summary printed at the end).
"""

import itertools
import random
import time

import pytest

from matroid_csm.csm import (
    csm_cycle,
    csm_degree_combinatorial,
    csm_degree_geometric,
    csm_degree_tutte,
    csm_intersection,
)
from matroid_csm.flags import beta_expansion, broken_circuit_h_vector, glv_count
from matroid_csm.tropical import WeightedCone, WeightedFan, balancing_check, bergman_fan, degree
from matroid_csm.tutte import tutte, tutte_corank_nullity

from conftest import CORPUS, record

SEEDS = range(5)
RELABELINGS = 5


def test_criterion_1_main_theorem_triple_equality():
    start = time.perf_counter()
    bad = []
    rows = 0
    for M in CORPUS:
        d = M.rank() - 1
        t = tutte(M)
        for k in range(d + 1):
            geo = csm_degree_geometric(M, k)
            comb = csm_degree_combinatorial(M, k)
            expected = (-1) ** (d - k) * t[k + 1, 0]
            rows += 1
            if not geo == comb == expected:
                bad.append((M.name, k, geo, comb, expected))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 120
    record(1, ok, f"{rows} (matroid, k) rows, mismatches {bad}, {elapsed:.1f}s (limit 120s)")
    assert ok


def test_criterion_2_tutte_oracle_equivalence():
    bad = [M.name for M in CORPUS if tutte(M) != tutte_corank_nullity(M)]
    record(2, not bad, f"activities vs corank-nullity over {len(CORPUS)} matroids, mismatches {bad}")
    assert not bad


def test_criterion_3_order_invariance():
    rng = random.Random(2024)
    bad = []
    checked = 0
    for M in CORPUS:
        T = tutte(M)
        if M.size <= 5:
            orders = itertools.permutations(M.elements)
        else:
            orders = [rng.sample(M.elements, M.size) for _ in range(20)]
        for order in orders:
            checked += 1
            if tutte(M, order) != T:
                bad.append((M.name, tuple(order)))
    record(3, not bad, f"{checked} orders checked, mismatches {bad[:3]}")
    assert not bad


def _perturbed(fan):
    target = fan.cones[0]
    cones = [WeightedCone(c.cone, c.weight + 1 if c is target else c.weight, c.flag) for c in fan.cones]
    return WeightedFan(fan.ambient, fan.dim, cones), target


def test_criterion_4_balancing():
    bad = []
    fans = 0
    for M in CORPUS:
        fans += 1
        if not balancing_check(bergman_fan(M)).balanced:
            bad.append((M.name, "bergman"))
        for k in range(M.rank()):
            fans += 1
            if not balancing_check(csm_cycle(M, k).fan).balanced:
                bad.append((M.name, k))
    # negative controls: bump one weight; exactly the facets of that cone must fail
    controls = []
    for M in CORPUS:
        fan = bergman_fan(M)
        if fan.dim == 0:
            continue
        broken, target = _perturbed(fan)
        rep = balancing_check(broken)
        failing = {frozenset(f.ridge) for f in rep.failures}
        facets = {frozenset(target.cone.rays) - {r} for r in target.cone.rays}
        controls.append(failing == facets)
    ok = not bad and controls and all(controls)
    record(4, ok, f"{fans} fans balanced (failures {bad}); "
                  f"{sum(controls)}/{len(controls)} negative controls flag exactly the altered cone's ridges")
    assert ok


def test_criterion_5_beta_expansion():
    bad = [M.name for M in CORPUS if beta_expansion(M) != tutte(M).at_y_zero()]
    record(5, not bad, f"increasing-flag beta sums equal T(M;x,0) coefficientwise, mismatches {bad}")
    assert not bad


def test_criterion_6_glv_cardinality():
    bad = []
    for M in CORPUS:
        T = tutte(M)
        for k in range(1, M.rank() + 1):
            if glv_count(M, k) != T[k, 0]:
                bad.append((M.name, k))
    record(6, not bad, f"|A_k(M)| = t_(k,0) for all k, mismatches {bad}")
    assert not bad


def test_criterion_7_broken_circuit_h_vector():
    bad = []
    checked = 0
    for M in CORPUS:
        t = tutte(M)
        r = M.rank()
        expected = [t[r - i, 0] for i in range(r + 1)]
        orders = itertools.permutations(M.elements) if M.size <= 5 else [None]
        for order in orders:
            checked += 1
            if broken_circuit_h_vector(M, order) != expected:
                bad.append((M.name, order))
    record(7, not bad, f"{checked} (matroid, order) h-vectors match t_(r-i,0), mismatches {bad[:3]}")
    assert not bad


def test_criterion_8_perturbation_and_chamber_stability():
    rng = random.Random(8)
    bad = []
    index_failures = []
    for M in CORPUS:
        for k in range(M.rank()):
            target = csm_degree_tutte(M, k)
            for s in SEEDS:
                for chamber in ("decreasing", "random"):
                    if csm_degree_geometric(M, k, s, chamber) != target:
                        bad.append((M.name, k, s, chamber))
            for p in csm_intersection(M, k):
                if p.index != 1:
                    index_failures.append((M.name, k, p.point))
        for _ in range(RELABELINGS):
            perm = rng.sample(range(M.size), M.size)
            N = M.relabel(perm)
            for k in range(N.rank()):
                if csm_degree_geometric(N, k, rng.randrange(10 ** 6)) != csm_degree_tutte(M, k):
                    bad.append((M.name, k, tuple(perm)))
    ok = not bad and not index_failures
    record(8, ok, f"degrees stable over {len(SEEDS)} seeds x 2 chambers and {RELABELINGS} relabelings "
                  f"(mismatches {bad[:3]}); non-unit lattice indices {index_failures[:3]}")
    assert ok


def test_criterion_9_classical_regression():
    bad = []
    for M in CORPUS:
        if degree(bergman_fan(M)) != 1 or tutte(M)[M.rank(), 0] != 1:
            bad.append(M.name)
    record(9, not bad, f"deg(Bergman fan) = 1 and t_(d+1,0) = 1, failures {bad}")
    assert not bad


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
