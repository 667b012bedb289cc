"""Errors raised by structures, teams and the file formats."""

from typing import Optional


class ModelError(ValueError):
    """Base class for structure and team errors."""


class UnboundVariableError(ModelError):
    pass


class TeamDomainError(ModelError):
    """A team's variable domain does not fit the operation."""


class FileFormatError(ModelError):
    def __init__(self, message: str, line: Optional[int] = None, source: str = "<input>"):
        self.line = line
        self.source = source
        if line is not None:
            message = f"{source}:{line}: {message}"
        super().__init__(message)
