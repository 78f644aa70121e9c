# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: light
# ---

# # CSM cycles and their degrees
#
# csm_k(M) lives on the k-skeleton of the Bergman fan, with weights given by
# signed beta products. Its degree is computed three independent ways.

# +
from matroid_csm import csm_cycle, verify_main_theorem
from matroid_csm.catalog import corpus, k4
from matroid_csm.csm import csm_intersection

M = k4()
for k in range(M.rank()):
    cyc = csm_cycle(M, k)
    print(f"csm_{k}: {len(cyc.fan)} cones, weights {sorted(c.weight for c in cyc.fan.cones)}")
# -

# Under a strictly decreasing perturbation each intersection point sits on
# the cone of an increasing flag.

for p in csm_intersection(M, 1):
    print(p.cone.flag, "mult", p.multiplicity, "index", p.index)

# +
for N in corpus():
    rep = verify_main_theorem(N, seeds=[0, 1], chamber="random")
    print(f"{rep.name:14s}", [(r.k, r.geometric, r.combinatorial, r.tutte) for r in rep.rows if r.seed == 0],
          "ok" if rep.passed else "MISMATCH")
