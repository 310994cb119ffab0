"""Conflict-free hypergraph colorings, exact {a,b}-factor search, and the
counterexample constructions connecting the two."""

from .exact_cf import ChiCfResult, cf_colorable, chi_cf_exact, chi_proper_exact, proper_colorable
from .factors import (
    Factor,
    FactorAnomalyError,
    ParityObstruction,
    SearchBudgetExceeded,
    cf2_via_duality,
    factor_defects,
    find_ab_factor,
    parity_precheck,
)
from .four_uniform import (
    AnomalyError,
    Characterization,
    EdgePath,
    EliminationOrdering,
    Separator,
    characterize_4uniform,
    color_4uniform,
    edge_distance,
    elimination_ordering,
    safe_separator,
    three_color_4uniform,
)
from .graph_io import (
    ParseError,
    load_coloring,
    load_factor,
    load_hypergraph,
    save_coloring,
    save_factor,
    save_hypergraph,
)
from .greedy import (
    StronglyIndependentSet,
    greedy_cf_coloring,
    maximal_strongly_independent_set,
    peel_then_solve,
)
from .lll import LLLParams, color_bound, randomized_cf_coloring
from .model import (
    Hypergraph,
    HypergraphError,
    HypergraphStats,
    VertexRole,
    VertexRoleMap,
    dual,
    remove_vertices,
    stats,
)
from .verify import (
    Coloring,
    is_conflict_free,
    is_proper,
    strong_condition,
    unique_color_witness,
)

__version__ = "0.1.0"

__all__ = [
    "AnomalyError",
    "Characterization",
    "ChiCfResult",
    "Coloring",
    "EdgePath",
    "EliminationOrdering",
    "Factor",
    "FactorAnomalyError",
    "Hypergraph",
    "HypergraphError",
    "HypergraphStats",
    "LLLParams",
    "ParityObstruction",
    "ParseError",
    "SearchBudgetExceeded",
    "Separator",
    "StronglyIndependentSet",
    "VertexRole",
    "VertexRoleMap",
    "cf2_via_duality",
    "cf_colorable",
    "characterize_4uniform",
    "chi_cf_exact",
    "chi_proper_exact",
    "color_4uniform",
    "color_bound",
    "dual",
    "edge_distance",
    "elimination_ordering",
    "factor_defects",
    "find_ab_factor",
    "greedy_cf_coloring",
    "is_conflict_free",
    "is_proper",
    "load_coloring",
    "load_factor",
    "load_hypergraph",
    "maximal_strongly_independent_set",
    "parity_precheck",
    "peel_then_solve",
    "proper_colorable",
    "randomized_cf_coloring",
    "remove_vertices",
    "safe_separator",
    "save_coloring",
    "save_factor",
    "save_hypergraph",
    "stats",
    "strong_condition",
    "three_color_4uniform",
    "unique_color_witness",
]
