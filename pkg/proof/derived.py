"""Generators for the derived rules PS-FO and PS-dep, and the first order reading of a theory."""

import itertools
import logging
from typing import List, Optional, Tuple

from general import Theta
from syntax import (
    And,
    Conj,
    Exists,
    FoFormula,
    FormulaError,
    Iff,
    IlFormula,
    Indep,
    Literal,
    Signature,
    TeamExists,
    TeamForall,
    Term,
    TermTuple,
    TensorOr,
    fo_of_il,
    forall_prefix,
    free_vars,
    relation_symbols,
    rename_relations,
    to_text,
)

from .rules import apply_rule, axiom_ind, axiom_lit, dependence_context, fo_schema, require_first_order
from .sequents import Proof, ProofStep, RuleTag, Sequent

logger = logging.getLogger(__name__)


class _ProofBuilder:
    def __init__(self) -> None:
        self.steps: List[ProofStep] = []

    def add(self, rule: RuleTag, sequent: Sequent, premises: Tuple[int, ...] = (), var: Optional[str] = None) -> int:
        index = len(self.steps) + 1
        self.steps.append(ProofStep(index, rule, sequent, premises, var=var))
        return index

    def sequent(self, index: int) -> Sequent:
        return self.steps[index - 1].sequent


def _derive(b: _ProofBuilder, gamma: FoFormula, phi: IlFormula) -> int:
    """Append a proof of ``forall v (gamma -> phi) | gamma |- phi``; returns its last step."""
    target = Sequent.of([fo_schema(gamma, fo_of_il(phi))], gamma, phi)
    match phi:
        case Literal():
            return b.add(RuleTag.LIT, axiom_lit(gamma, phi))

        case TensorOr(left, right):
            g1 = And(gamma, fo_of_il(left))
            g2 = And(gamma, fo_of_il(right))
            a = _derive(b, g1, left)
            c = b.add(RuleTag.ENT, Sequent.of([], g1, left), (a,))
            d0 = _derive(b, g2, right)
            d = b.add(RuleTag.ENT, Sequent.of([], g2, right), (d0,))
            e_seq = apply_rule(RuleTag.OR, [b.sequent(c), b.sequent(d)], gamma=gamma).sequent
            e = b.add(RuleTag.OR, e_seq, (c, d))
            return b.add(RuleTag.ENT, target, (e,))

        case Conj(left, right):
            a = _derive(b, gamma, left)
            c = _derive(b, gamma, right)
            d = b.add(RuleTag.AND, apply_rule(RuleTag.AND, [b.sequent(a), b.sequent(c)]).sequent, (a, c))
            return b.add(RuleTag.ENT, target, (d,))

        case TeamExists(x, body):
            inner = And(Exists(x, gamma), fo_of_il(body))
            a = _derive(b, inner, body)
            c = b.add(RuleTag.ENT, Sequent.of([], inner, body), (a,))
            d_seq = apply_rule(RuleTag.EXISTS, [b.sequent(c)], gamma=gamma, var=x).sequent
            d = b.add(RuleTag.EXISTS, d_seq, (c,), var=x)
            v = free_vars(gamma).team | free_vars(inner).team
            split = Iff(And(Exists(x, gamma), Exists(x, fo_of_il(body))), Exists(x, gamma))
            e = b.add(RuleTag.ENT, Sequent.of([forall_prefix(v, split)], gamma, phi), (d,))
            return b.add(RuleTag.ENT, target, (e,))

        case TeamForall(x, body):
            inner = Exists(x, gamma)
            a = _derive(b, inner, body)
            c_seq = apply_rule(RuleTag.FORALL, [b.sequent(a)], gamma=gamma, var=x).sequent
            c = b.add(RuleTag.FORALL, c_seq, (a,), var=x)
            d = b.add(RuleTag.ENT, Sequent(b.sequent(a).ctx, gamma, phi), (c,))
            return b.add(RuleTag.ENT, target, (d,))

    raise FormulaError(f"{to_text(phi)} is not a first order formula")


def derive_fo(gamma: FoFormula, phi: IlFormula, name: str = "derived-fo") -> Proof:
    """A proof of ``forall v (gamma -> phi) | gamma |- phi`` by recursion on ``phi``.

    A literal takes one PS-lit step. On top of the steps for its parts a
    disjunction or an existential adds four, a conjunction two and a
    universal three.

    Raises:
        FormulaError: ``phi`` has an independence or dependence atom
    """
    require_first_order(phi)
    if free_vars(phi).params:
        raise FormulaError(f"{to_text(phi)} has parameter variables")
    builder = _ProofBuilder()
    _derive(builder, gamma, phi)
    logger.debug("derived %s in %d steps", to_text(phi), len(builder.steps))
    return Proof(name, tuple(builder.steps))


def derive_dep(gamma: FoFormula, terms: TermTuple, target: Term, name: str = "derived-dep") -> Proof:
    """PS-ind for ``indep(terms ; target ; target)`` followed by PS-ent to the functional dependency context."""
    builder = _ProofBuilder()
    first = builder.add(RuleTag.IND, axiom_ind(gamma, terms, (target,), (target,)))
    atom = Indep(terms, (target,), (target,))
    builder.add(RuleTag.ENT, Sequent.of([dependence_context(gamma, terms, target)], gamma, atom), (first,))
    return Proof(name, tuple(builder.steps))


def theta_fo(theta: Theta, taken: Tuple[str, ...] = ()) -> Tuple[Tuple[FoFormula, ...], Signature]:
    """Every ``exists R theta(R)`` of ``theta`` as ``theta(S)`` with fresh symbols ``S1, S2, ...``.

    The symbols are pairwise disjoint and avoid ``taken`` and every relation
    symbol of the theory.  Returns the sentences and their signature.
    """
    used = set(taken)
    for sentence in theta.sentences:
        used |= relation_symbols(sentence.body)
    counter = itertools.count(1)
    out: List[FoFormula] = []
    for sentence in theta.sentences:
        mapping = {}
        for rel, _ in sentence.relation_vars:
            symbol = next(f"S{n}" for n in counter if f"S{n}" not in used)
            used.add(symbol)
            mapping[rel] = symbol
        out.append(rename_relations(sentence.body, mapping))
    return tuple(out), Signature.infer(out)
