"""The axioms and rules of the sequent calculus.

Every function builds the conclusion exactly as its schema dictates; the
checker compares the result with what a proof states.  Quantifier prefixes
``forall v`` list their variables in lexicographic order, outermost first.
"""

import logging
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from general import Theta
from syntax import (
    Conj,
    Equal,
    Exists,
    FoFormula,
    FormulaError,
    Iff,
    IlFormula,
    Implies,
    Indep,
    Literal,
    Or,
    TeamExists,
    TeamForall,
    TeamVar,
    TensorOr,
    Term,
    TermTuple,
    all_team_var_names,
    big_and,
    conjoin,
    conjuncts,
    desugar_dep,
    exists_prefix,
    forall_prefix,
    free_vars,
    fresh_name,
    has_independence_atom,
    literal_as_fo,
    relation_symbols,
    rename_relations,
    rename_team_vars,
    substitute_param,
    to_text,
    tuple_equal,
)

from .errors import RuleApplicationError
from .sequents import Derivation, Obligation, RuleTag, Sequent

logger = logging.getLogger(__name__)

_PREMISE_COUNT = {
    RuleTag.OR: 2,
    RuleTag.AND: 2,
    RuleTag.EXISTS: 1,
    RuleTag.FORALL: 1,
    RuleTag.ENT: 1,
    RuleTag.DEPAR: 1,
    RuleTag.SPLIT: 2,
    RuleTag.THETA: 1,
}


def _team_vars(*nodes: object) -> Set[str]:
    out: Set[str] = set()
    for node in nodes:
        out |= free_vars(node).team
    return out


# ------------------------------------------------------------------ axioms

def axiom_lit(gamma: FoFormula, lit: IlFormula) -> Sequent:
    """``forall v (gamma -> lit) | gamma |- lit``."""
    if not isinstance(lit, Literal):
        raise RuleApplicationError(f"PS-lit needs a first order literal, got {to_text(lit)}")
    if free_vars(lit).params:
        raise RuleApplicationError(f"PS-lit literal {to_text(lit)} has parameter variables")
    body = Implies(gamma, literal_as_fo(lit))
    return Sequent.of([forall_prefix(_team_vars(gamma, lit), body)], gamma, lit)


def variable_copies(
    gamma: FoFormula,
    terms: Iterable[TermTuple],
    count: int,
) -> Tuple[List[str], List[Dict[str, str]]]:
    """The variables ``v`` of ``gamma`` and ``terms`` and ``count`` renamings of them.

    Copy ``j`` of ``x`` is ``x_j``, primed while the name is taken by
    ``gamma``, the terms or an earlier copy.
    """
    tuples = list(terms)
    v = sorted(_team_vars(gamma, *tuples))
    used = all_team_var_names(gamma) | set(v)
    for t in tuples:
        used |= all_team_var_names(t)
    copies: List[Dict[str, str]] = []
    for j in range(1, count + 1):
        mapping: Dict[str, str] = {}
        for x in v:
            name = fresh_name(f"{x}_{j}", used)
            used.add(name)
            mapping[x] = name
        copies.append(mapping)
    return v, copies


def _equalities(left: TermTuple, right: TermTuple) -> List[FoFormula]:
    return [tuple_equal(left, right)] if left else []


def axiom_ind(gamma: FoFormula, t1: TermTuple, t2: TermTuple, t3: TermTuple) -> Sequent:
    """The PS-ind axiom for ``indep(t1 ; t2 ; t3)``.

    Its context says that any two rows agreeing on ``t1`` are interpolated by
    a third one.  Tuple equalities over empty tuples are left out.
    """
    for t in (t1, t2, t3):
        if free_vars(t).params:
            raise RuleApplicationError("PS-ind terms must not contain parameter variables")
    _, (m1, m2, m3) = variable_copies(gamma, (t1, t2, t3), 3)

    def at(node, mapping):
        return rename_team_vars(node, mapping)

    g1, g2, g3 = at(gamma, m1), at(gamma, m2), at(gamma, m3)
    premise = conjoin([g1, g2, *_equalities(at(t1, m1), at(t1, m2))])
    witness = conjoin([
        g3,
        *_equalities(at(t1 + t2, m3), at(t1 + t2, m1)),
        *_equalities(at(t1 + t3, m3), at(t1 + t3, m2)),
    ])
    outer = list(m1.values()) + list(m2.values())
    sentence = forall_prefix(outer, Implies(premise, exists_prefix(m3.values(), witness)))
    return Sequent.of([sentence], gamma, Indep(t1, t2, t3))


def dependence_context(gamma: FoFormula, terms: TermTuple, target: Term) -> FoFormula:
    """``forall v1 v2 ((gamma(v1) & gamma(v2) & t(v1) = t(v2)) -> t'(v1) = t'(v2))``."""
    _, (m1, m2, _) = variable_copies(gamma, (terms, (target,), (target,)), 3)
    premise = conjoin([
        rename_team_vars(gamma, m1),
        rename_team_vars(gamma, m2),
        *_equalities(rename_team_vars(terms, m1), rename_team_vars(terms, m2)),
    ])
    conclusion = Equal(rename_team_vars(target, m1), rename_team_vars(target, m2))
    return forall_prefix(list(m1.values()) + list(m2.values()), Implies(premise, conclusion))


# ------------------------------------------------------------------- rules

def apply_rule(
    tag: RuleTag,
    premises: Sequence[Sequent],
    *,
    gamma: Optional[FoFormula] = None,
    var: Optional[str] = None,
    param: Optional[str] = None,
    ctx: Optional[Iterable[FoFormula]] = None,
    theta: Optional[Theta] = None,
    theta_index: Optional[int] = None,
    relations: Sequence[str] = (),
) -> Derivation:
    """The conclusion of one rule application.

    ``gamma`` is the new team definition of PS-or, PS-exists and PS-forall;
    ``ctx`` the new context of PS-ent, whose entailment obligation is
    returned with the conclusion and not discharged here.

    Raises:
        RuleApplicationError: wrong premise count or shape, missing rule
            parameter or a failed side condition
    """
    if tag.is_axiom:
        raise RuleApplicationError(f"{tag.value} is an axiom and takes no premises")
    if len(premises) != _PREMISE_COUNT[tag]:
        raise RuleApplicationError(f"{tag.value} needs {_PREMISE_COUNT[tag]} premises, got {len(premises)}")

    match tag:
        case RuleTag.OR:
            if gamma is None:
                raise RuleApplicationError("PS-or needs the new team definition gamma")
            s1, s2 = premises
            v = _team_vars(gamma, s1.gamma, s2.gamma)
            cover = forall_prefix(v, Iff(gamma, Or(s1.gamma, s2.gamma)))
            return Derivation(Sequent(s1.ctx | s2.ctx | {cover}, gamma, TensorOr(s1.phi, s2.phi)))

        case RuleTag.AND:
            s1, s2 = premises
            if s1.gamma != s2.gamma:
                raise RuleApplicationError(
                    f"PS-and premises define different teams: {to_text(s1.gamma)} and {to_text(s2.gamma)}"
                )
            return Derivation(Sequent(s1.ctx | s2.ctx, s1.gamma, Conj(s1.phi, s2.phi)))

        case RuleTag.EXISTS | RuleTag.FORALL:
            if gamma is None or var is None:
                raise RuleApplicationError(f"{tag.value} needs a team variable and the new gamma")
            (s,) = premises
            v = _team_vars(gamma, s.gamma)
            if tag == RuleTag.EXISTS:
                link = forall_prefix(v, Iff(Exists(var, s.gamma), Exists(var, gamma)))
                return Derivation(Sequent(s.ctx | {link}, gamma, TeamExists(var, s.phi)))
            link = forall_prefix(v, Iff(s.gamma, Exists(var, gamma)))
            return Derivation(Sequent(s.ctx | {link}, gamma, TeamForall(var, s.phi)))

        case RuleTag.ENT:
            if ctx is None:
                raise RuleApplicationError("PS-ent needs the new context")
            (s,) = premises
            new_ctx = frozenset(ctx)
            return Derivation(Sequent(new_ctx, s.gamma, s.phi), Obligation(new_ctx, s.ctx))

        case RuleTag.DEPAR:
            if param is None:
                raise RuleApplicationError("PS-depar needs a parameter variable")
            (s,) = premises
            if param in free_vars(s.gamma).params:
                raise RuleApplicationError(f"parameter ${param} occurs free in {to_text(s.gamma)}")
            return Derivation(Sequent.of([depar_formula(s.ctx, param)], s.gamma, s.phi))

        case RuleTag.SPLIT:
            s1, s2 = premises
            if s1.gamma != s2.gamma or desugar_dep(s1.phi) != desugar_dep(s2.phi):
                raise RuleApplicationError("PS-split premises must share gamma and phi")
            return Derivation(Sequent.of([Or(big_and(s1.ctx), big_and(s2.ctx))], s1.gamma, s1.phi))

        case RuleTag.THETA:
            (s,) = premises
            return Derivation(_theta_rule(s, theta, theta_index, tuple(relations)))

    raise RuleApplicationError(f"unknown rule {tag}")


def depar_formula(ctx: Iterable[FoFormula], param: str) -> FoFormula:
    """``exists p /\\ ctx`` with ``p`` turned into a fresh team variable named after it."""
    body = big_and(ctx)
    z = fresh_name(param, all_team_var_names(body))
    return Exists(z, substitute_param(body, param, TeamVar(z)))


def _theta_rule(
    s: Sequent,
    theta: Optional[Theta],
    index: Optional[int],
    relations: Tuple[str, ...],
) -> Sequent:
    if theta is None:
        raise RuleApplicationError("PS-theta needs a relation existence theory")
    if index is None or not 0 <= index < len(theta.sentences):
        raise RuleApplicationError(f"theory {theta.name} has no sentence {index}")
    sentence = theta.sentences[index]
    names = [n for n, _ in sentence.relation_vars]
    if len(relations) != len(names) or len(set(relations)) != len(relations):
        raise RuleApplicationError(f"PS-theta needs {len(names)} distinct relation symbols, got {list(relations)}")
    symbols = set(relations)
    others = relation_symbols(sentence.body) - set(names)
    if symbols & others:
        raise RuleApplicationError(f"symbols {sorted(symbols & others)} already occur in the theory sentence")
    if symbols & (relation_symbols(s.gamma) | relation_symbols(s.phi)):
        raise RuleApplicationError(f"symbols {sorted(symbols)} occur in gamma or phi")

    instance = rename_relations(sentence.body, dict(zip(names, relations)))
    parts = conjuncts(instance)
    first = {c for c in s.ctx if relation_symbols(c) & symbols}
    rest = s.ctx - first
    for c in first:
        if c not in parts:
            raise RuleApplicationError(f"{to_text(c)} is not a conjunct of theory sentence {index}")
    for c in parts:
        if relation_symbols(c) & symbols and c not in first:
            raise RuleApplicationError(f"conjunct {to_text(c)} of theory sentence {index} is missing from the context")
    logger.debug("PS-theta discharges %d context formulas with sentence %d", len(first), index)
    return Sequent(rest, s.gamma, s.phi)


def fo_schema(gamma: FoFormula, phi: FoFormula) -> FoFormula:
    """``forall v (gamma -> phi)`` over the free team variables of both."""
    return forall_prefix(_team_vars(gamma, phi), Implies(gamma, phi))


def require_first_order(phi: IlFormula) -> None:
    if has_independence_atom(phi):
        raise FormulaError(f"{to_text(phi)} contains an independence atom")
