"""Errors raised while reading or transforming formulas."""

from typing import Optional


class FormulaError(ValueError):
    """Base class for every formula-level error."""


class ParseError(FormulaError):
    """Malformed input text."""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)


class UndeclaredSymbolError(ParseError):
    pass


class ArityError(ParseError):
    pass


class BoundParameterError(ParseError):
    pass


class NegationError(ParseError):
    """Negation applied to something other than an atom."""


class ParameterInFormulaError(ParseError):
    """Parameter variables never occur in independence logic formulas."""


class CaptureError(FormulaError):
    pass


class NonInjectiveRenamingError(FormulaError):
    pass


class EmptyDependenceError(FormulaError):
    pass
