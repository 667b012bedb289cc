"""Prover budget and verdicts."""

from enum import Enum
from typing import Dict, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from model import Structure


class Budget(BaseModel):
    """Resources for one entailment query.

    ``depth`` is the number of iterative deepening rounds (the maximal term
    nesting in kept clauses); ``ms`` bounds the resolution phase and, again,
    the countermodel phase; ``cm_size`` is the largest countermodel tried.
    """

    model_config = ConfigDict(frozen=True)

    depth: int = Field(default=5, ge=0)
    ms: int = Field(default=2000, ge=0)
    cm_size: int = Field(default=3, ge=0)


class VerdictKind(str, Enum):
    PROVED = "proved"
    REFUTED = "refuted"
    UNKNOWN = "unknown"


class ProverVerdict(BaseModel):
    kind: VerdictKind
    steps: int = 0
    countermodel: Optional[Structure] = None
    assignment: Dict[str, str] = Field(default_factory=dict)
    reason: str = ""

    @model_validator(mode="after")
    def check_countermodel(self) -> "ProverVerdict":
        if (self.kind == VerdictKind.REFUTED) != (self.countermodel is not None):
            raise ValueError("exactly the refuted verdicts carry a countermodel")
        return self

    @classmethod
    def proved(cls, steps: int) -> "ProverVerdict":
        return cls(kind=VerdictKind.PROVED, steps=steps)

    @classmethod
    def refuted(cls, M: Structure, h: Dict[str, str]) -> "ProverVerdict":
        return cls(kind=VerdictKind.REFUTED, countermodel=M, assignment=dict(h))

    @classmethod
    def unknown(cls, reason: str) -> "ProverVerdict":
        return cls(kind=VerdictKind.UNKNOWN, reason=reason)

    @property
    def is_proved(self) -> bool:
        return self.kind == VerdictKind.PROVED

    @property
    def is_refuted(self) -> bool:
        return self.kind == VerdictKind.REFUTED
