"""Katz similarity, effective resistance, and pair rankings on paths and cycles.

Closed-form Katz scores for the two graph families, built on a family of
tridiagonal determinant polynomials, with brute-force linear-algebra oracles,
ranking-agreement analysis, and a bisection solver for the decay values where
path rankings stop agreeing with effective resistance.
"""

from .dpoly import (
    D_cycle_denominator,
    D_parity_form,
    INV_SQRT5,
    d_closed,
    d_recursive,
    d_sequence,
    d_sequence_exact,
    d_special_half,
    d_special_root5,
    fib_ratio,
    ratio_constant,
)
from .graphs import (
    AdmissibilityError,
    GraphSpec,
    VertexPair,
    graph_distance,
    require_admissible,
    resistance,
    resistance_oracle,
    spectral_radius,
    spectral_radius_oracle,
)
from .katz import (
    SeriesDivergenceError,
    determinant_cycle,
    determinant_path,
    katz_cycle,
    katz_cycle_exact,
    katz_cycle_matrix,
    katz_limit_cycle,
    katz_limit_path,
    katz_oracle_inverse,
    katz_oracle_series,
    katz_path,
    katz_path_exact,
    katz_path_matrix,
)
from .ordering import (
    AgreementReport,
    BisectionDivergenceError,
    BracketError,
    CutoffResult,
    PairRanking,
    RankingInversion,
    agreement,
    class_structures_match,
    cutoff_root,
    cutoff_table,
    cycle_numerator_gap,
    p_gap,
    p_tilde,
    pair_scores,
    rank_pairs,
    score_classes,
)

__all__ = [
    "AdmissibilityError",
    "AgreementReport",
    "BisectionDivergenceError",
    "BracketError",
    "CutoffResult",
    "D_cycle_denominator",
    "D_parity_form",
    "GraphSpec",
    "INV_SQRT5",
    "PairRanking",
    "RankingInversion",
    "SeriesDivergenceError",
    "VertexPair",
    "agreement",
    "class_structures_match",
    "cutoff_root",
    "cutoff_table",
    "cycle_numerator_gap",
    "d_closed",
    "d_recursive",
    "d_sequence",
    "d_sequence_exact",
    "d_special_half",
    "d_special_root5",
    "determinant_cycle",
    "determinant_path",
    "fib_ratio",
    "graph_distance",
    "katz_cycle",
    "katz_cycle_exact",
    "katz_cycle_matrix",
    "katz_limit_cycle",
    "katz_limit_path",
    "katz_oracle_inverse",
    "katz_oracle_series",
    "katz_path",
    "katz_path_exact",
    "katz_path_matrix",
    "p_gap",
    "p_tilde",
    "pair_scores",
    "rank_pairs",
    "ratio_constant",
    "require_admissible",
    "resistance",
    "resistance_oracle",
    "score_classes",
    "spectral_radius",
    "spectral_radius_oracle",
]

__version__ = "0.1.0"
