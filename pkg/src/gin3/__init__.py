"""Generic initial ideals of complete intersections of three forms in three variables."""

from .gin import ConstructionError, GinResult, construct_gin_greedy, generator_count, mu_bound, mu_bound_check
from .hilbert import CaseTag, DegreeTriple, HilbertTable, InvalidDegrees, ci_hilbert_series, classify_case, target_counts
from .lefschetz import MapRankReport, is_strong_lefschetz_x3, is_weak_lefschetz_x3, x3_power_map_rank
from .monomials import (
    DegreeSlice,
    Monomial,
    MonomialIdeal,
    degree_slice,
    ideal_membership,
    is_almost_revlex,
    is_strongly_stable,
    minimalize,
    monomials_of_degree,
    quotient_hilbert,
    revlex_compare,
    shadow,
)
from .templates import construct_gin_closed_form

__all__ = [
    "CaseTag",
    "ConstructionError",
    "DegreeSlice",
    "DegreeTriple",
    "GinResult",
    "HilbertTable",
    "InvalidDegrees",
    "MapRankReport",
    "Monomial",
    "MonomialIdeal",
    "ci_hilbert_series",
    "classify_case",
    "construct_gin_closed_form",
    "construct_gin_greedy",
    "degree_slice",
    "generator_count",
    "ideal_membership",
    "is_almost_revlex",
    "is_strong_lefschetz_x3",
    "is_strongly_stable",
    "is_weak_lefschetz_x3",
    "minimalize",
    "monomials_of_degree",
    "mu_bound",
    "mu_bound_check",
    "quotient_hilbert",
    "revlex_compare",
    "shadow",
    "target_counts",
    "x3_power_map_rank",
]
