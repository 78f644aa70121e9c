import itertools
from fractions import Fraction

import pytest

from matroid_csm.catalog import corpus

CORPUS = corpus()

# acceptance criterion results, printed at the end of the session
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record(criterion: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[criterion] = (ok, detail)
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for c in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[c]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {c}: {detail}")


@pytest.fixture(params=CORPUS, ids=lambda M: M.name)
def corpus_matroid(request):
    return request.param


def leibniz_det(A):
    """Determinant by the permutation expansion; slow but independent."""
    n = len(A)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = 1
        for i in range(n):
            prod *= A[i][perm[i]]
        total += -prod if inversions % 2 else prod
    return total


def graph_tutte_deletion_contraction(edges):
    """Tutte polynomial of a multigraph by deletion-contraction, as {(i, j): c}."""
    def components(vs, es):
        parent = {v: v for v in vs}

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        for u, w in es:
            parent[find(u)] = find(w)
        return len({find(v) for v in vs})

    def rec(es):
        if not es:
            return {(0, 0): 1}
        (u, w), rest = es[0], es[1:]
        vs = {x for e in es for x in e}
        if u == w:
            return {(i, j + 1): c for (i, j), c in rec(rest).items()}
        if components(vs, rest) > components(vs, es):
            contracted = [(u if a == w else a, u if b == w else b) for a, b in rest]
            return {(i + 1, j): c for (i, j), c in rec(contracted).items()}
        out = dict(rec(rest))
        contracted = [(u if a == w else a, u if b == w else b) for a, b in rest]
        for k, c in rec(contracted).items():
            out[k] = out.get(k, 0) + c
        return out

    return {k: c for k, c in rec(list(edges)).items() if c}


def frac(s):
    return Fraction(s)
