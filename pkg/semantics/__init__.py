"""Team semantics, general team semantics and the dependency atoms."""

from .atoms import functional_dependency_holds, sat_independence_atom
from .evaluator import NotInFamilyError, TeamEvaluator, eval_full, eval_gts

__all__ = [
    "functional_dependency_holds",
    "sat_independence_atom",
    "NotInFamilyError",
    "TeamEvaluator",
    "eval_full",
    "eval_gts",
]
