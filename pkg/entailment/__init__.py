"""Entailment semantics with constructive witness trees."""

from .evaluation import (
    check_witness,
    default_var_domain,
    eval_entailment,
    eval_entailment_witnessed,
)
from .witness import WitnessNode, WitnessShapeError, parse_witness, witness_to_text

__all__ = [
    "check_witness",
    "default_var_domain",
    "eval_entailment",
    "eval_entailment_witnessed",
    "WitnessNode",
    "WitnessShapeError",
    "parse_witness",
    "witness_to_text",
]
