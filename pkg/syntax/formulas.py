"""Abstract syntax for first order formulas and NNF independence logic formulas.

The two languages share atoms but nothing else: ``And``/``Or`` are the
classical connectives, ``Conj``/``TensorOr`` the team connectives.  Negation
in independence logic only exists inside a ``Literal``, so every ``IlFormula``
is in negation normal form by construction.
"""

from dataclasses import dataclass
from typing import Tuple, Union

from .terms import Term, TermTuple


# ---------------------------------------------------------------- first order

@dataclass(frozen=True, slots=True)
class RelAtom:
    name: str
    args: TermTuple


@dataclass(frozen=True, slots=True)
class Equal:
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Top:
    pass


@dataclass(frozen=True, slots=True)
class Bottom:
    pass


@dataclass(frozen=True, slots=True)
class Not:
    body: "FoFormula"


@dataclass(frozen=True, slots=True)
class And:
    left: "FoFormula"
    right: "FoFormula"


@dataclass(frozen=True, slots=True)
class Or:
    left: "FoFormula"
    right: "FoFormula"


@dataclass(frozen=True, slots=True)
class Implies:
    left: "FoFormula"
    right: "FoFormula"


@dataclass(frozen=True, slots=True)
class Iff:
    left: "FoFormula"
    right: "FoFormula"


@dataclass(frozen=True, slots=True)
class Exists:
    var: str
    body: "FoFormula"


@dataclass(frozen=True, slots=True)
class Forall:
    var: str
    body: "FoFormula"


TOP = Top()
BOTTOM = Bottom()

Atom = Union[RelAtom, Equal]
FoFormula = Union[RelAtom, Equal, Top, Bottom, Not, And, Or, Implies, Iff, Exists, Forall]
FO_BINARY = (And, Or, Implies, Iff)
FO_QUANTIFIERS = (Exists, Forall)


# ------------------------------------------------------- independence logic

@dataclass(frozen=True, slots=True)
class Literal:
    positive: bool
    atom: Atom


@dataclass(frozen=True, slots=True)
class Indep:
    first: TermTuple
    second: TermTuple
    third: TermTuple


@dataclass(frozen=True, slots=True)
class Dep:
    """``dep(t1, ..., tn)``; kept until ``desugar_dep`` rewrites it."""

    terms: TermTuple


@dataclass(frozen=True, slots=True)
class TensorOr:
    left: "IlFormula"
    right: "IlFormula"


@dataclass(frozen=True, slots=True)
class Conj:
    left: "IlFormula"
    right: "IlFormula"


@dataclass(frozen=True, slots=True)
class TeamExists:
    var: str
    body: "IlFormula"


@dataclass(frozen=True, slots=True)
class TeamForall:
    var: str
    body: "IlFormula"


IlFormula = Union[Literal, Indep, Dep, TensorOr, Conj, TeamExists, TeamForall]
IL_QUANTIFIERS = (TeamExists, TeamForall)

Formula = Union[FoFormula, IlFormula]


def is_fo(node: object) -> bool:
    return isinstance(node, (RelAtom, Equal, Top, Bottom, Not, And, Or, Implies, Iff, Exists, Forall))


def is_il(node: object) -> bool:
    return isinstance(node, (Literal, Indep, Dep, TensorOr, Conj, TeamExists, TeamForall))


def literal_as_fo(lit: Literal) -> FoFormula:
    return lit.atom if lit.positive else Not(lit.atom)


def il_children(phi: IlFormula) -> Tuple[IlFormula, ...]:
    match phi:
        case TensorOr(left, right) | Conj(left, right):
            return (left, right)
        case TeamExists(_, body) | TeamForall(_, body):
            return (body,)
    return ()
