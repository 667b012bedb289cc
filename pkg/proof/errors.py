"""Errors of the sequent calculus."""

from model import FileFormatError


class SequentError(ValueError):
    """A sequent violates the variable restrictions of its parts."""


class RuleApplicationError(ValueError):
    """Premises do not have the shape a rule needs, or a side condition fails."""


class ProofFormatError(FileFormatError):
    pass
