"""Matroid Chern-Schwartz-MacPherson cycles as tropical fans, with exact degree checks."""

from .csm import (
    CsmCycle,
    csm_cycle,
    csm_degree_combinatorial,
    csm_degree_geometric,
    csm_degree_tutte,
    verify_main_theorem,
)
from .flags import (
    FlagOfFlats,
    beta_expansion,
    beta_product,
    broken_circuit_h_vector,
    glv_count,
    increasing_flags,
    proper_flags,
)
from .matroid import Matroid, direct_sum, from_graph, from_matrix, uniform
from .tropical import (
    WeightedFan,
    balancing_check,
    bergman_fan,
    cone_of_flag,
    degree,
    generic_linear_space,
    stable_intersection_points,
    uniform_membership,
)
from .tutte import TuttePolynomial, beta, reduced_char_poly, tutte, tutte_corank_nullity

__version__ = "0.1.0"
