"""The sequent calculus: sequents, rule application, proof checking and generation."""

from .checker import CheckReport, Overall, StepResult, StepStatus, check_proof, check_step
from .derived import derive_dep, derive_fo, theta_fo
from .errors import ProofFormatError, RuleApplicationError, SequentError
from .files import (
    parse_proof,
    parse_proofs,
    parse_sequents,
    proof_to_text,
    sequent_to_text,
    step_to_text,
)
from .rules import (
    apply_rule,
    axiom_ind,
    axiom_lit,
    dependence_context,
    depar_formula,
    fo_schema,
    variable_copies,
)
from .sequents import Derivation, Obligation, Proof, ProofStep, RuleTag, Sequent
from .validity import SequentVerdict, holds_in_general_model, sequent_signature, validate_sequent

__all__ = [
    "CheckReport",
    "Overall",
    "StepResult",
    "StepStatus",
    "check_proof",
    "check_step",
    "derive_dep",
    "derive_fo",
    "theta_fo",
    "ProofFormatError",
    "RuleApplicationError",
    "SequentError",
    "parse_proof",
    "parse_proofs",
    "parse_sequents",
    "proof_to_text",
    "sequent_to_text",
    "step_to_text",
    "apply_rule",
    "axiom_ind",
    "axiom_lit",
    "dependence_context",
    "depar_formula",
    "fo_schema",
    "variable_copies",
    "Derivation",
    "Obligation",
    "Proof",
    "ProofStep",
    "RuleTag",
    "Sequent",
    "SequentVerdict",
    "holds_in_general_model",
    "sequent_signature",
    "validate_sequent",
]
