# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: light
# ---

# # Bergman fans, balancing and degree
#
# Cones come from flags of flats; rays are indicator vectors of flats taken
# modulo the all-ones vector.

# +
from fractions import Fraction

from matroid_csm import balancing_check, bergman_fan, degree, generic_linear_space, uniform
from matroid_csm.tropical import WeightedCone, WeightedFan, stable_intersection_points

tripod = bergman_fan(uniform(2, 3))
for c in tripod.cones:
    print(c.flag, c.cone.rays, c.weight)
print(balancing_check(tripod).balanced)
# -

# Doubling one leg breaks balancing at the origin.

bad = WeightedFan(2, 1, [WeightedCone(c.cone, 2 if i == 0 else 1) for i, c in enumerate(tripod.cones)])
print(balancing_check(bad).failures)

# Translate a second tripod by v = (1, 3) and intersect; one point survives.

for p in stable_intersection_points(tripod, generic_linear_space(2, 1), (Fraction(1), Fraction(3))):
    print(p.point, p.multiplicity, p.index)
print("degree", degree(tripod))
