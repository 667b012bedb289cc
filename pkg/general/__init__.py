"""General models, bounded closure checking and relation existence theories."""

from .closure import ClosureVerdict, check_general_closure
from .models import FamilyKind, GeneralModel, least_family, verify_least_collapse
from .theta import (
    Theta,
    ThetaError,
    ThetaSentence,
    ThetaVerdict,
    check_theta_closed,
    parse_theta,
    sentence_to_text,
    theta_to_text,
)

__all__ = [
    "ClosureVerdict",
    "check_general_closure",
    "FamilyKind",
    "GeneralModel",
    "least_family",
    "verify_least_collapse",
    "Theta",
    "ThetaError",
    "ThetaSentence",
    "ThetaVerdict",
    "check_theta_closed",
    "parse_theta",
    "sentence_to_text",
    "theta_to_text",
]
