"""Named matroids used as a test corpus and by the command line."""

from __future__ import annotations

import itertools

from .matroid import Matroid, direct_sum, from_graph, from_matrix, uniform

K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def k4() -> Matroid:
    return from_graph(4, K4_EDGES, "K4")


def k4_minus_edge() -> Matroid:
    return from_graph(4, K4_EDGES[:-1], "K4-e")


def fano() -> Matroid:
    # columns are the nonzero vectors of GF(2)^3
    cols = [v for v in itertools.product((0, 1), repeat=3) if any(v)]
    return from_matrix(2, [[c[i] for c in cols] for i in range(3)], "Fano")


def u12_plus_u23() -> Matroid:
    return direct_sum(uniform(1, 2), uniform(2, 3), "U(1,2)+U(2,3)")


def corpus() -> list[Matroid]:
    return [
        uniform(1, 2),
        uniform(2, 3),
        uniform(2, 4),
        uniform(3, 5),
        uniform(3, 6),
        k4(),
        k4_minus_edge(),
        fano(),
        u12_plus_u23(),
    ]


NAMED = {
    "K4": k4,
    "K4-e": k4_minus_edge,
    "fano": fano,
    "U12+U23": u12_plus_u23,
}
