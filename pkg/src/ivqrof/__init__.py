"""Group decision making with interval-valued q-rung orthopair fuzzy data.

Expert matrices in; per-alternative expert weights, objective attribute
weights, blended interval scores, and a ranking out.
"""

from .aggregation import WeightVector, ivqrofywa, ivqrofywg
from .audit import AuditEvent, AuditTrail
from .core import (
    DEFAULT_CONTEXT,
    IVqROFN,
    NEGATIVE_IDEAL,
    POSITIVE_IDEAL,
    FuzzyDomainError,
    RungContext,
    RungInfeasibleError,
    ShapeError,
    ValidityError,
    add,
    div,
    hesitancy,
    infer_q,
    mul,
    power,
    scale,
    sub,
    validate_number,
)
from .critic import (
    DistanceMode,
    attribute_index,
    column_mean,
    column_stddev,
    correlation,
    interval_weights,
    interval_weights_standardized,
    realize_weights,
    standardize,
)
from .dm_weights import DMWeightMatrix, SimilarityMatrix, dm_weight_matrix, similarity_matrix
from .estimator import CriticWaspasRanker
from .matrix import DecisionMatrix, Polarity
from .measures import CISParams, ScoreParams, cis, compare, distance, nis, pis, score
from .pipeline import (
    GroupProblem,
    RankingResult,
    SensitivityReport,
    SweepPoint,
    aggregate_experts,
    solve,
    sweep,
)
from .problem_io import (
    ProblemFormatError,
    load_case_study,
    load_problem,
    parse_problem,
    serialize_problem,
    serialize_result,
    serialize_sweep,
)
from .waspas import Ranking, WaspasParams, blend, rank, wpm_importance, wsm_importance
from .yager import yager_add, yager_mul, yager_power, yager_scale

__version__ = "0.1.0"

__all__ = [
    "AuditEvent",
    "AuditTrail",
    "CISParams",
    "CriticWaspasRanker",
    "DEFAULT_CONTEXT",
    "DMWeightMatrix",
    "DecisionMatrix",
    "DistanceMode",
    "FuzzyDomainError",
    "GroupProblem",
    "IVqROFN",
    "NEGATIVE_IDEAL",
    "POSITIVE_IDEAL",
    "Polarity",
    "ProblemFormatError",
    "Ranking",
    "RankingResult",
    "RungContext",
    "RungInfeasibleError",
    "ScoreParams",
    "SensitivityReport",
    "ShapeError",
    "SimilarityMatrix",
    "SweepPoint",
    "ValidityError",
    "WaspasParams",
    "WeightVector",
    "add",
    "aggregate_experts",
    "attribute_index",
    "blend",
    "cis",
    "column_mean",
    "column_stddev",
    "compare",
    "correlation",
    "distance",
    "div",
    "dm_weight_matrix",
    "hesitancy",
    "infer_q",
    "interval_weights",
    "interval_weights_standardized",
    "ivqrofywa",
    "ivqrofywg",
    "load_case_study",
    "load_problem",
    "mul",
    "nis",
    "parse_problem",
    "pis",
    "power",
    "rank",
    "realize_weights",
    "scale",
    "score",
    "serialize_problem",
    "serialize_result",
    "serialize_sweep",
    "similarity_matrix",
    "solve",
    "standardize",
    "sub",
    "sweep",
    "validate_number",
    "wpm_importance",
    "wsm_importance",
    "yager_add",
    "yager_mul",
    "yager_power",
    "yager_scale",
]
