"""Sequents, proof steps and proofs."""

from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterable, Optional, Tuple

from syntax import FoFormula, IlFormula, desugar_dep, free_vars, to_text

from .errors import SequentError


class RuleTag(str, Enum):
    LIT = "PS-lit"
    IND = "PS-ind"
    OR = "PS-or"
    AND = "PS-and"
    EXISTS = "PS-exists"
    FORALL = "PS-forall"
    ENT = "PS-ent"
    DEPAR = "PS-depar"
    SPLIT = "PS-split"
    THETA = "PS-theta"

    @property
    def is_axiom(self) -> bool:
        return self in (RuleTag.LIT, RuleTag.IND)


@dataclass(frozen=True, slots=True)
class Sequent:
    """``ctx | gamma |- phi``.

    The context is a set of first order formulas whose only free variables
    are parameter variables; ``phi`` has no parameter variables.
    """

    ctx: FrozenSet[FoFormula]
    gamma: FoFormula
    phi: IlFormula

    def __post_init__(self) -> None:
        for c in self.ctx:
            if free_vars(c).team:
                raise SequentError(f"context formula {to_text(c)} has free team variables")
        if free_vars(self.phi).params:
            raise SequentError(f"{to_text(self.phi)} has parameter variables")

    @classmethod
    def of(cls, ctx: Iterable[FoFormula], gamma: FoFormula, phi: IlFormula) -> "Sequent":
        return cls(frozenset(ctx), gamma, phi)

    def same_as(self, other: "Sequent") -> bool:
        """Equality with contexts compared as sets and ``dep`` read as its independence atom."""
        return (
            self.ctx == other.ctx
            and self.gamma == other.gamma
            and desugar_dep(self.phi) == desugar_dep(other.phi)
        )

    def ordered_ctx(self) -> Tuple[FoFormula, ...]:
        return tuple(sorted(self.ctx, key=to_text))

    def __str__(self) -> str:
        ctx = ", ".join(to_text(c) for c in self.ordered_ctx())
        return f"{ctx} | {to_text(self.gamma)} |- {to_text(self.phi)}"


@dataclass(frozen=True, slots=True)
class Obligation:
    """A first order entailment ``/\\ premises |= /\\ goals`` a PS-ent step depends on."""

    premises: FrozenSet[FoFormula]
    goals: FrozenSet[FoFormula]

    def __str__(self) -> str:
        left = ", ".join(sorted(to_text(p) for p in self.premises)) or "true"
        right = ", ".join(sorted(to_text(g) for g in self.goals)) or "true"
        return f"{left} |= {right}"


@dataclass(frozen=True, slots=True)
class Derivation:
    sequent: Sequent
    obligation: Optional[Obligation] = None


@dataclass(frozen=True, slots=True)
class ProofStep:
    """One numbered line of a proof with the rule parameters it states.

    ``param`` is a parameter variable name without ``$``; ``theta_index``
    selects a sentence of the relation existence theory and ``relations``
    lists the fresh symbols replacing its relation variables.
    """

    index: int
    rule: RuleTag
    sequent: Sequent
    premises: Tuple[int, ...] = ()
    var: Optional[str] = None
    param: Optional[str] = None
    theta_index: Optional[int] = None
    relations: Tuple[str, ...] = ()


@dataclass(frozen=True, slots=True)
class Proof:
    name: str
    steps: Tuple[ProofStep, ...]

    @property
    def conclusion(self) -> Sequent:
        return self.steps[-1].sequent

    @property
    def length(self) -> int:
        return len(self.steps) - 1
