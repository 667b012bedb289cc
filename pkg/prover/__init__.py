"""Bounded first order entailment: resolution refutation plus finite countermodels."""

from .clauses import ClauseExplosion, clausify, equality_axioms, nnf, subsumes, unify
from .countermodel import find_countermodel
from .oracle import DEFAULT_BUDGET, prove_entailment
from .search import SearchOutcome, SearchResult, refute
from .verdicts import Budget, ProverVerdict, VerdictKind

__all__ = [
    "ClauseExplosion",
    "clausify",
    "equality_axioms",
    "nnf",
    "subsumes",
    "unify",
    "find_countermodel",
    "DEFAULT_BUDGET",
    "prove_entailment",
    "SearchOutcome",
    "SearchResult",
    "refute",
    "Budget",
    "ProverVerdict",
    "VerdictKind",
]
