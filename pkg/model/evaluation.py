"""Tarski semantics for first order formulas under a parameter and a team assignment."""

from typing import Mapping

from syntax import (
    And,
    App,
    Bottom,
    Const,
    Equal,
    Exists,
    FoFormula,
    Forall,
    Iff,
    Implies,
    Not,
    Or,
    ParamVar,
    RelAtom,
    TeamVar,
    Term,
    Top,
)

from .errors import UnboundVariableError
from .structure import Element, Structure


def eval_term(M: Structure, h: Mapping[str, Element], s: Mapping[str, Element], t: Term) -> Element:
    match t:
        case TeamVar(name):
            try:
                return s[name]
            except KeyError:
                raise UnboundVariableError(f"team variable {name} is unassigned") from None
        case ParamVar(name):
            try:
                return h[name]
            except KeyError:
                raise UnboundVariableError(f"parameter variable ${name} is unassigned") from None
        case Const(name):
            return M.constant(name)
        case App(func, args):
            return M.apply(func, tuple(eval_term(M, h, s, a) for a in args))
    raise TypeError(f"not a term: {t!r}")


def eval_fo(M: Structure, h: Mapping[str, Element], s: Mapping[str, Element], phi: FoFormula) -> bool:
    """``M |=_{h u s} phi``."""
    match phi:
        case Top():
            return True
        case Bottom():
            return False
        case RelAtom(name, args):
            return M.holds(name, tuple(eval_term(M, h, s, a) for a in args))
        case Equal(left, right):
            return eval_term(M, h, s, left) == eval_term(M, h, s, right)
        case Not(body):
            return not eval_fo(M, h, s, body)
        case And(l, r):
            return eval_fo(M, h, s, l) and eval_fo(M, h, s, r)
        case Or(l, r):
            return eval_fo(M, h, s, l) or eval_fo(M, h, s, r)
        case Implies(l, r):
            return not eval_fo(M, h, s, l) or eval_fo(M, h, s, r)
        case Iff(l, r):
            return eval_fo(M, h, s, l) == eval_fo(M, h, s, r)
        case Exists(var, body):
            return any(eval_fo(M, h, {**s, var: m}, body) for m in M.domain)
        case Forall(var, body):
            return all(eval_fo(M, h, {**s, var: m}, body) for m in M.domain)
    raise TypeError(f"not a first order formula: {phi!r}")


def eval_sentence(M: Structure, h: Mapping[str, Element], phi: FoFormula) -> bool:
    return eval_fo(M, h, {}, phi)
