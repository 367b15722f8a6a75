"""Matching powers of monomial ideals and edge ideals of weighted oriented graphs."""
from .betti import (
    BettiTable,
    HomologicalInvariants,
    NormalizedDepthProfile,
    SimplicialComplex,
    has_linear_resolution,
    homological_invariants,
    multigraded_betti,
    normalized_depth,
    reduced_homology_dims,
    single_degree,
    upper_koszul_complex,
)
from .errors import (
    AmbientMismatchError,
    CapExceededError,
    MatchpowError,
    MixedDegreesError,
    NotFullySupportedError,
    ParseError,
    WeightViolationError,
    ZeroIdealError,
)
from .graphs import (
    EdgeWeightedGraph,
    SimpleGraph,
    WeightedOrientedGraph,
    block_structure,
    edge_ideal,
    edge_weighted_ideal,
    induced_matching_number,
    induced_subgraph,
    longest_induced_path,
    matching_number,
    oriented_edge_ideal,
    perfect_matchings,
    validate_weights,
    weighted_induced_matching_number,
)
from .linalg import QQ, CoefficientField
from .matching import generator_matchings, matching_power, monomial_grade
from .monomials import (
    Ambient,
    MonomialIdeal,
    bounding_multidegree,
    divides,
    initial_degree,
    lcm,
    localize,
    minimize_generators,
    polarize,
    radical,
    support,
    support_disjoint,
    var_degree,
)
from .structure import (
    has_linear_quotients,
    is_linearly_related,
    is_matroidal,
    is_polymatroidal,
    syzygy_graph,
)

__version__ = "0.1.0"

__all__ = [
    "QQ",
    "CoefficientField",
    "generator_matchings",
    "matching_power",
    "monomial_grade",
    "Ambient",
    "AmbientMismatchError",
    "BettiTable",
    "block_structure",
    "bounding_multidegree",
    "CapExceededError",
    "divides",
    "edge_ideal",
    "edge_weighted_ideal",
    "EdgeWeightedGraph",
    "has_linear_quotients",
    "has_linear_resolution",
    "homological_invariants",
    "HomologicalInvariants",
    "induced_matching_number",
    "induced_subgraph",
    "initial_degree",
    "is_linearly_related",
    "is_matroidal",
    "is_polymatroidal",
    "lcm",
    "localize",
    "longest_induced_path",
    "matching_number",
    "MatchpowError",
    "minimize_generators",
    "MixedDegreesError",
    "MonomialIdeal",
    "multigraded_betti",
    "normalized_depth",
    "NormalizedDepthProfile",
    "NotFullySupportedError",
    "oriented_edge_ideal",
    "ParseError",
    "perfect_matchings",
    "polarize",
    "radical",
    "reduced_homology_dims",
    "SimpleGraph",
    "SimplicialComplex",
    "single_degree",
    "support",
    "support_disjoint",
    "syzygy_graph",
    "upper_koszul_complex",
    "validate_weights",
    "var_degree",
    "weighted_induced_matching_number",
    "WeightedOrientedGraph",
    "WeightViolationError",
    "ZeroIdealError",
]
