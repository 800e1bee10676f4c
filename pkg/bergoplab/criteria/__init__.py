"""
Criterion evaluators

Each evaluator assembles measure statistics, boundary profiles and matrix
oracles into one report whose cross-checks compare conditions that should
give the same verdict.
"""

from .atomic import atom_image_norm, evaluate_atomic_criterion, random_coefficients
from .battery import bergman_battery, hardy_battery, run_battery, run_hardy_battery
from .embedding import difference_spec, evaluate_embedding_criterion, evaluate_lp_average_criterion
from .hardy import evaluate_hardy_difference
from .linear_sum import evaluate_linear_sum
from .schatten import evaluate_schatten_criterion

__all__ = [
    "difference_spec",
    "evaluate_embedding_criterion",
    "evaluate_lp_average_criterion",
    "evaluate_schatten_criterion",
    "evaluate_atomic_criterion",
    "evaluate_hardy_difference",
    "evaluate_linear_sum",
    "atom_image_norm",
    "random_coefficients",
    "bergman_battery",
    "hardy_battery",
    "run_battery",
    "run_hardy_battery",
]
