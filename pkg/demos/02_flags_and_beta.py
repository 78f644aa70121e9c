# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: light
# ---

# # Increasing flags and the beta expansion
#
# Summing products of beta invariants of the step minors over increasing
# flags of flats reproduces T(M; x, 0). The count of pairs (flag, tuple of
# (1,0)-active bases) matches t_(k,0) as well.

# +
from matroid_csm import beta_expansion, broken_circuit_h_vector, glv_count, increasing_flags, tutte
from matroid_csm.catalog import fano
from matroid_csm.flags import beta_product

M = fano()
for k in range(1, M.rank() + 1):
    for f in increasing_flags(M, k):
        print(k, f, "beta product", beta_product(M, f))
# -

print("beta expansion ", beta_expansion(M))
print("T(M; x, 0)     ", tutte(M).at_y_zero())
print("GL-V counts    ", [glv_count(M, k) for k in range(1, M.rank() + 1)])
print("NBC h-vector   ", broken_circuit_h_vector(M))
