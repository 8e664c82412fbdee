"""Multi-author credit weights: equal, arithmetic (two types), geometric and
harmonic schemes, plus weighted citation indices built on them."""

from credit_weights.index import AuthorProfile, PaperRecord, build_profiles, effective_citations, h_index
from credit_weights.schemes import (
    AlphaBound,
    CreditWeightsError,
    Linearity,
    Positivity,
    Scheme,
    SchemeSpec,
    WeightVector,
    alpha_from_endpoints,
    alpha_matching_type1,
    classify_linearity,
    delta_vs_equal,
    equal_weights,
    first_last_ratio,
    geometric_weights,
    harmonic_sum,
    harmonic_weights,
    max_alpha,
    type1_weights,
    type2_endpoints,
    type2_ratio,
    type2_weights,
    weights_from_endpoints,
)

__version__ = "0.1.0"
