"""Entailment semantics: satisfaction by a team given symbolically as ``gamma`` under ``h``."""

import logging
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from model import (
    Element,
    Structure,
    Team,
    TeamDomainError,
    canonical_team_definition,
    eval_sentence,
    team_extend_universal,
    team_of_definition,
)
from semantics import TeamEvaluator, eval_full, sat_independence_atom
from syntax import (
    Conj,
    Exists,
    FoFormula,
    Iff,
    IlFormula,
    Implies,
    Indep,
    Literal,
    Or,
    TeamExists,
    TeamForall,
    TensorOr,
    desugar_dep,
    forall_prefix,
    free_vars,
    literal_as_fo,
)

from .witness import WitnessNode, WitnessShapeError

logger = logging.getLogger(__name__)

_RULE_FOR = {
    Literal: "ES-lit",
    Indep: "ES-ind",
    TensorOr: "ES-or",
    Conj: "ES-and",
    TeamExists: "ES-exists",
    TeamForall: "ES-forall",
}


def default_var_domain(gamma: FoFormula, phi: IlFormula) -> Tuple[str, ...]:
    return tuple(sorted(free_vars(gamma).team | free_vars(phi).team))


def _defined_team(
    M: Structure,
    gamma: FoFormula,
    h: Mapping[str, Element],
    phi: IlFormula,
    var_domain: Optional[Iterable[str]],
) -> Tuple[IlFormula, Team]:
    phi = desugar_dep(phi)
    variables = tuple(sorted(set(var_domain))) if var_domain is not None else default_var_domain(gamma, phi)
    if not free_vars(phi).team <= set(variables):
        raise TeamDomainError(f"free variables of the formula are outside {variables}")
    return phi, team_of_definition(M, gamma, h, variables)


def eval_entailment(
    M: Structure,
    gamma: FoFormula,
    h: Mapping[str, Element],
    phi: IlFormula,
    var_domain: Optional[Iterable[str]] = None,
) -> bool:
    """``M |=_{gamma(h)} phi``, decided on the team ``gamma`` defines."""
    phi, X = _defined_team(M, gamma, h, phi, var_domain)
    return eval_full(M, X, phi)


def eval_entailment_witnessed(
    M: Structure,
    gamma: FoFormula,
    h: Mapping[str, Element],
    phi: IlFormula,
    var_domain: Optional[Iterable[str]] = None,
) -> Optional[WitnessNode]:
    """A witness tree for ``M |=_{gamma(h)} phi``, or ``None`` when it fails.

    The definitions stored in the tree are the diagrams of the teams found by
    the team semantics search, with fresh parameters ``$w1, $w2, ...``.
    """
    phi, X = _defined_team(M, gamma, h, phi, var_domain)
    evaluator = TeamEvaluator(M)
    if not evaluator.sat(X, phi):
        return None
    taken = set(h) | free_vars(gamma).params
    used = [int(p[1:]) for p in taken if p[:1] == "w" and p[1:].isdigit()]
    counter = [max(used, default=0) + 1]
    return _build(evaluator, X, phi, counter)


def _diagram(X: Team, M: Structure, counter: List[int]) -> Tuple[FoFormula, Tuple[Tuple[str, str], ...]]:
    gamma, h = canonical_team_definition(X, param_prefix="w", start=counter[0], order=M.index)
    counter[0] += len(h)
    return gamma, tuple(sorted(h.items(), key=lambda item: int(item[0][1:])))


def _build(ev: TeamEvaluator, X: Team, phi: IlFormula, counter: List[int]) -> WitnessNode:
    M = ev.M
    match phi:
        case Literal():
            return WitnessNode("ES-lit")
        case Indep():
            return WitnessNode("ES-ind")
        case Conj(left, right):
            return WitnessNode("ES-and", children=(_build(ev, X, left, counter), _build(ev, X, right, counter)))
        case TensorOr(left, right):
            Y, Z = ev.split_witness(X, phi)
            g1, b1 = _diagram(Y, M, counter)
            g2, b2 = _diagram(Z, M, counter)
            return WitnessNode(
                "ES-or", b1 + b2, (g1, g2),
                (_build(ev, Y, left, counter), _build(ev, Z, right, counter)),
            )
        case TeamExists(var, body):
            Y = ev.variation_witness(X, phi)
            g, b = _diagram(Y, M, counter)
            return WitnessNode("ES-exists", b, (g,), (_build(ev, Y, body, counter),))
        case TeamForall(var, body):
            Y = team_extend_universal(M, X, var)
            g, b = _diagram(Y, M, counter)
            return WitnessNode("ES-forall", b, (g,), (_build(ev, Y, body, counter),))
    raise TypeError(f"not an independence logic formula: {phi!r}")


def check_witness(
    M: Structure,
    gamma: FoFormula,
    h: Mapping[str, Element],
    phi: IlFormula,
    witness: WitnessNode,
    var_domain: Optional[Iterable[str]] = None,
) -> bool:
    """Verify every clause side condition recorded in ``witness``.

    Raises:
        WitnessShapeError: the tree does not follow the shape of ``phi``
    """
    phi = desugar_dep(phi)
    variables = tuple(sorted(set(var_domain))) if var_domain is not None else default_var_domain(gamma, phi)
    return _check(M, dict(h), variables, gamma, phi, witness)


def _extend(M: Structure, h: Dict[str, Element], node: WitnessNode) -> Optional[Dict[str, Element]]:
    extended = dict(h)
    for param, value in node.bindings:
        if value not in M.index or extended.get(param, value) != value:
            return None
        extended[param] = value
    for g in node.formulas:
        if not free_vars(g).params <= set(extended):
            return None
    return extended


def _check(
    M: Structure,
    h: Dict[str, Element],
    variables: Tuple[str, ...],
    gamma: FoFormula,
    phi: IlFormula,
    node: WitnessNode,
) -> bool:
    expected = _RULE_FOR.get(type(phi))
    if node.rule != expected:
        raise WitnessShapeError(f"formula needs {expected}, witness has {node.rule}")
    h2 = _extend(M, h, node)
    if h2 is None:
        return False
    allowed = set(variables) | ({phi.var} if isinstance(phi, (TeamExists, TeamForall)) else set())
    for g in node.formulas:
        if not free_vars(g).team <= allowed:
            return False
    match phi:
        case Literal():
            return eval_sentence(M, h2, forall_prefix(variables, Implies(gamma, literal_as_fo(phi))))
        case Indep(first, second, third):
            X = team_of_definition(M, gamma, h2, variables)
            return sat_independence_atom(M, X, first, second, third)
        case Conj(left, right):
            return (
                _check(M, h2, variables, gamma, left, node.children[0])
                and _check(M, h2, variables, gamma, right, node.children[1])
            )
        case TensorOr(left, right):
            g1, g2 = node.formulas
            if not eval_sentence(M, h2, forall_prefix(variables, Iff(gamma, Or(g1, g2)))):
                return False
            return (
                _check(M, h2, variables, g1, left, node.children[0])
                and _check(M, h2, variables, g2, right, node.children[1])
            )
        case TeamExists(var, body):
            (g,) = node.formulas
            wider = tuple(sorted(set(variables) | {var}))
            outer = [v for v in wider if v != var]
            if not eval_sentence(M, h2, forall_prefix(outer, Iff(Exists(var, g), Exists(var, gamma)))):
                return False
            return _check(M, h2, wider, g, body, node.children[0])
        case TeamForall(var, body):
            (g,) = node.formulas
            wider = tuple(sorted(set(variables) | {var}))
            if not eval_sentence(M, h2, forall_prefix(wider, Iff(g, Exists(var, gamma)))):
                return False
            return _check(M, h2, wider, g, body, node.children[0])
    raise TypeError(f"not an independence logic formula: {phi!r}")
