"""Exact rational census of [0,1] and the machinery that explains it:
Farey sequences, mediants, two approximation engines, and the collinear
structure of the normalized frequency graph."""

from .approximation import (
    ApproximationTrack,
    CFExpansion,
    EquivalenceReport,
    Target,
    cf_expand,
    compare_tracks,
    convergents,
    evaluate_cf,
    farey_approximate,
    fibonacci_lucas_track,
    random_reduced_fractions,
)
from .census import (
    Census,
    FrequencyRecord,
    closed_form_census,
    counterpart,
    distinct_count,
    enumerate_trial,
    extended_occurrence,
    extended_trial,
    farey_sequence,
    max_kappa,
    normalized,
    occurrence,
    percentage,
    rnf,
    top_records_by_rnf,
)
from .errors import IterationLimitError, MediantError, ResourceLimitError
from .fraction import (
    Fraction,
    NeighbourPair,
    abs_difference,
    are_neighbours,
    fixed_decimal,
    mediant,
    parse_decimal,
    reduce,
    significant_decimal,
    symmetry_partner,
)
from .geometry import (
    GraphPoint,
    LineGroup,
    classify_category_a,
    classify_category_b,
    collinear_through,
    graph_points,
    integer_slope_forms,
    points_new_at_order,
    rnf_local_maxima,
    vertical_points,
)

__version__ = "0.1.0"

__all__ = [
    "ApproximationTrack",
    "CFExpansion",
    "Census",
    "EquivalenceReport",
    "Fraction",
    "FrequencyRecord",
    "GraphPoint",
    "IterationLimitError",
    "LineGroup",
    "MediantError",
    "NeighbourPair",
    "ResourceLimitError",
    "Target",
    "abs_difference",
    "are_neighbours",
    "cf_expand",
    "classify_category_a",
    "classify_category_b",
    "closed_form_census",
    "collinear_through",
    "compare_tracks",
    "convergents",
    "counterpart",
    "distinct_count",
    "enumerate_trial",
    "evaluate_cf",
    "extended_occurrence",
    "extended_trial",
    "farey_approximate",
    "farey_sequence",
    "fibonacci_lucas_track",
    "fixed_decimal",
    "graph_points",
    "integer_slope_forms",
    "max_kappa",
    "mediant",
    "normalized",
    "occurrence",
    "parse_decimal",
    "percentage",
    "points_new_at_order",
    "random_reduced_fractions",
    "reduce",
    "rnf",
    "rnf_local_maxima",
    "significant_decimal",
    "symmetry_partner",
    "top_records_by_rnf",
    "vertical_points",
]
