"""
berg-op-lab - a numerical laboratory for differences of weighted
composition operators on weighted Bergman spaces and H^2.
"""

__version__ = "0.1.0"

from .criteria import (
    evaluate_atomic_criterion,
    evaluate_embedding_criterion,
    evaluate_hardy_difference,
    evaluate_linear_sum,
    evaluate_lp_average_criterion,
    evaluate_schatten_criterion,
)
from .models import (
    AnalyticSymbol,
    CriterionParams,
    CriterionReport,
    SpaceParams,
    SymbolQuadruple,
    Verdict,
)
from .symbols import build_quadruple, parse_symbol

__all__ = [
    "AnalyticSymbol",
    "SymbolQuadruple",
    "SpaceParams",
    "CriterionParams",
    "CriterionReport",
    "Verdict",
    "build_quadruple",
    "parse_symbol",
    "evaluate_embedding_criterion",
    "evaluate_lp_average_criterion",
    "evaluate_schatten_criterion",
    "evaluate_atomic_criterion",
    "evaluate_hardy_difference",
    "evaluate_linear_sum",
]
