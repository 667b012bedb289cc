"""Canonical concrete syntax.

Binary connectives are always parenthesized.  Quantifier scope extends as far
right as possible when parsing, so a left operand that ends in an open
quantifier gets an extra pair of parentheses.
"""

from typing import Union

from .formulas import (
    And,
    Bottom,
    Conj,
    Dep,
    Equal,
    Exists,
    FoFormula,
    Forall,
    Iff,
    IlFormula,
    Implies,
    Indep,
    Literal,
    Not,
    Or,
    RelAtom,
    TeamExists,
    TeamForall,
    TensorOr,
    Top,
)
from .terms import App, Const, ParamVar, TeamVar, Term, TermTuple

_FO_OPS = {And: "&", Or: "|", Implies: "->", Iff: "<->"}
_IL_OPS = {Conj: "/\\", TensorOr: "\\/"}


def term_to_text(term: Term) -> str:
    match term:
        case TeamVar(name) | Const(name):
            return name
        case ParamVar(name):
            return "$" + name
        case App(func, args):
            return f"{func}({tuple_to_text(args)})"
    raise TypeError(f"not a term: {term!r}")


def tuple_to_text(terms: TermTuple) -> str:
    return ", ".join(term_to_text(t) for t in terms)


def _ends_open(phi: object) -> bool:
    while isinstance(phi, Not):
        phi = phi.body
    return isinstance(phi, (Exists, Forall, TeamExists, TeamForall))


def _left(phi: object) -> str:
    text = to_text(phi)
    return f"({text})" if _ends_open(phi) else text


def to_text(node: Union[Term, FoFormula, IlFormula]) -> str:
    """Print a term or formula so that parsing the result gives ``node`` back."""
    match node:
        case TeamVar() | ParamVar() | Const() | App():
            return term_to_text(node)
        case Top():
            return "true"
        case Bottom():
            return "false"
        case RelAtom(name, args):
            return f"{name}({tuple_to_text(args)})"
        case Equal(left, right):
            return f"{term_to_text(left)} = {term_to_text(right)}"
        case Not(body):
            return "not " + to_text(body)
        case And(l, r) | Or(l, r) | Implies(l, r) | Iff(l, r):
            return f"({_left(l)} {_FO_OPS[type(node)]} {to_text(r)})"
        case Conj(l, r) | TensorOr(l, r):
            return f"({_left(l)} {_IL_OPS[type(node)]} {to_text(r)})"
        case Exists(var, body) | TeamExists(var, body):
            return f"exists {var}. {to_text(body)}"
        case Forall(var, body) | TeamForall(var, body):
            return f"forall {var}. {to_text(body)}"
        case Literal(True, atom):
            return to_text(atom)
        case Literal(False, Equal(left, right)):
            return f"{term_to_text(left)} != {term_to_text(right)}"
        case Literal(False, atom):
            return "~" + to_text(atom)
        case Indep(first, second, third):
            return f"indep({tuple_to_text(first)} ; {tuple_to_text(second)} ; {tuple_to_text(third)})"
        case Dep(terms):
            return f"dep({tuple_to_text(terms)})"
    raise TypeError(f"cannot print {node!r}")
