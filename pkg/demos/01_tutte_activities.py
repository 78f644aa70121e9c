# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: light
# ---

# # Basis activities and the Tutte polynomial
#
# A matroid is stored as its list of bases. Each basis gets an internal and
# an external activity, and counting bases by those two numbers gives the
# Tutte polynomial.

# +
from matroid_csm import tutte, tutte_corank_nullity, reduced_char_poly
from matroid_csm.catalog import k4
from matroid_csm.matroid import elements_of
from matroid_csm.tutte import activities, render_poly

M = k4()
print(M)
# -

# Activities of a few spanning trees of K4, edges numbered in input order.

for B in sorted(M.bases)[:5]:
    rec = activities(M, B)
    print(elements_of(B), "internal", rec.internal, "external", rec.external)

# The activity count agrees with the subset (corank-nullity) expansion,
# whatever order we put on the edges.

T = tutte(M)
print(T.render())
print(T == tutte_corank_nullity(M), T == tutte(M, [5, 3, 1, 0, 2, 4]))

# T(M; x, 0) and the shifted reduced characteristic polynomial:

print(render_poly(T.at_y_zero(), "x"))
print(render_poly(reduced_char_poly(M, shifted=True)))
