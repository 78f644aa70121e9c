import pytest

from matroid_csm.catalog import fano, k4, u12_plus_u23
from matroid_csm.csm import (
    KOutOfRange,
    csm_cycle,
    csm_degree_combinatorial,
    csm_degree_geometric,
    csm_degree_tutte,
    csm_intersection,
    verify_main_theorem,
)
from matroid_csm.flags import beta_product, increasing_flags
from matroid_csm.matroid import LoopPresent, Matroid, uniform
from matroid_csm.tropical import balancing_check, bergman_fan
from matroid_csm.tutte import beta, tutte_corank_nullity

from conftest import CORPUS

SMALL = [M for M in CORPUS if M.name != "Fano"]


class TestCycle:
    def test_u23_zero(self):
        cyc = csm_cycle(uniform(2, 3), 0)
        assert len(cyc.fan) == 1
        assert cyc.fan.cones[0].weight == -1
        assert cyc.fan.cones[0].cone.rays == ()

    def test_u23_one(self):
        cyc = csm_cycle(uniform(2, 3), 1)
        assert sorted(c.weight for c in cyc.fan.cones) == [1, 1, 1]

    @pytest.mark.parametrize("M", CORPUS, ids=lambda M: M.name)
    def test_top_is_bergman(self, M):
        assert csm_cycle(M, M.rank() - 1).fan.weights() == bergman_fan(M).weights()

    @pytest.mark.parametrize("M", CORPUS, ids=lambda M: M.name)
    def test_bottom_is_signed_beta(self, M):
        cyc = csm_cycle(M, 0)
        w = (-1) ** (M.rank() - 1) * beta(M)
        assert [c.weight for c in cyc.fan.cones] == ([w] if w else [])

    def test_dropped_flags(self):
        # every 2-step flag of U12+U23 through a disconnected step is dropped
        M = u12_plus_u23()
        cyc = csm_cycle(M, 1)
        assert cyc.dropped
        for f in cyc.dropped:
            assert beta_product(M, f) == 0
        zero = csm_cycle(M, 0)
        assert len(zero.fan) == 0 and csm_degree_geometric(M, 0) == 0

    def test_errors(self):
        with pytest.raises(KOutOfRange):
            csm_cycle(uniform(2, 3), 2)
        with pytest.raises(LoopPresent):
            csm_cycle(Matroid.from_bases(2, [[0]]), 0)

    @pytest.mark.parametrize("M", CORPUS, ids=lambda M: M.name)
    def test_balanced(self, M):
        for k in range(M.rank()):
            assert balancing_check(csm_cycle(M, k).fan).balanced


class TestDegrees:
    @pytest.mark.parametrize("k, expected", [(0, -1), (1, 1)])
    def test_u23(self, k, expected):
        M = uniform(2, 3)
        assert csm_degree_geometric(M, k) == csm_degree_combinatorial(M, k) == expected

    def test_k4(self):
        M = k4()
        t = tutte_corank_nullity(M)
        assert t[2, 0] == 3
        assert [csm_degree_geometric(M, k) for k in range(3)] == [2, -3, 1]
        assert [csm_degree_combinatorial(M, k) for k in range(3)] == [2, -3, 1]

    @pytest.mark.parametrize("M", CORPUS, ids=lambda M: M.name)
    def test_top_degree_one(self, M):
        assert csm_degree_combinatorial(M, M.rank() - 1) == 1

    @pytest.mark.parametrize("M", SMALL, ids=lambda M: M.name)
    def test_points_match_increasing_flags(self, M):
        for k in range(M.rank()):
            pts = csm_intersection(M, k)
            expected = sorted(f.flats for f in increasing_flags(M, k + 1) if beta_product(M, f))
            assert sorted(p.cone.flag.flats for p in pts) == expected
            for p in pts:
                assert p.index == 1
                assert abs(p.multiplicity) == beta_product(M, p.cone.flag)

    @pytest.mark.parametrize("M", SMALL, ids=lambda M: M.name)
    def test_sign_pattern(self, M):
        d = M.rank() - 1
        for k in range(d + 1):
            deg = csm_degree_tutte(M, k)
            assert deg == 0 or (deg > 0) == ((d - k) % 2 == 0)


class TestReport:
    def test_u23(self):
        rep = verify_main_theorem(uniform(2, 3))
        assert rep.passed
        assert [(r.geometric, r.combinatorial, r.tutte) for r in rep.rows] == [(-1, -1, -1), (1, 1, 1)]
        doc = rep.to_json()
        assert doc["rank"] == 2 and doc["rows"][0]["pass"] is True

    def test_k4(self):
        rep = verify_main_theorem(k4())
        assert [r.tutte for r in rep.rows] == [2, -3, 1]
        assert rep.passed

    def test_fano(self):
        rep = verify_main_theorem(fano())
        assert rep.passed
        assert [r.tutte for r in rep.rows] == [3, -4, 1]

    def test_multiple_seeds(self):
        rep = verify_main_theorem(uniform(3, 5), seeds=[0, 1, 2], chamber="random")
        assert len(rep.rows) == 9 and rep.passed
