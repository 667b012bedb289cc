"""Empirical validity of sequents over small structures."""

import itertools
import logging
from typing import Dict, Iterable, Optional

from pydantic import BaseModel, Field

from entailment import eval_entailment
from general import (
    GeneralModel,
    Theta,
    ThetaSentence,
    check_theta_closed,
)
from model import Structure, count_structures, enumerate_structures, eval_sentence, team_of_definition
from syntax import Signature, free_vars, fresh_name, rename_relations, symbols_of

from .sequents import Sequent

logger = logging.getLogger(__name__)


class SequentVerdict(BaseModel):
    """``valid`` up to ``max_size``, or the first counterexample found."""

    valid: bool
    max_size: int
    counterexample: Optional[Structure] = None
    assignment: Dict[str, str] = Field(default_factory=dict)
    structures_checked: int = 0
    exhaustive: bool = True


def sequent_signature(s: Sequent) -> Signature:
    return Signature.infer([*s.ctx, s.gamma, s.phi])


def _apart(theta: Theta, sig: Signature) -> Theta:
    """Rename relation variables that clash with symbols of ``sig``."""
    taken = set(sig.relations) | set(sig.functions) | set(sig.constants)
    sentences = []
    for sentence in theta.sentences:
        mapping: Dict[str, str] = {}
        for rel, _ in sentence.relation_vars:
            if rel in taken:
                mapping[rel] = fresh_name(rel, taken | set(mapping.values()))
        sentences.append(ThetaSentence(
            tuple((mapping.get(r, r), a) for r, a in sentence.relation_vars),
            rename_relations(sentence.body, mapping),
        ))
    return Theta(theta.name, tuple(sentences))


def _theory_symbols(theta: Theta) -> Signature:
    sig = Signature()
    for sentence in theta.sentences:
        used = symbols_of(sentence.body)
        sig = sig.merge(used.without_relations([r for r, _ in sentence.relation_vars]))
    return sig


def validate_sequent(
    s: Sequent,
    max_size: int,
    theta: Optional[Theta] = None,
    limit: Optional[int] = None,
) -> SequentVerdict:
    """Check ``s`` in every structure up to ``max_size`` and every parameter assignment.

    Whenever the context holds, the team defined by ``gamma`` must satisfy
    ``phi``.  With ``theta``, only structures whose full general model is
    closed under the theory count.  ``limit`` caps the structures tried per
    size, making the verdict non-exhaustive when reached.
    """
    if max_size < 1:
        raise ValueError(f"model size bound must be positive, got {max_size}")
    sig = sequent_signature(s)
    if theta is not None:
        sig = sig.merge(_theory_symbols(theta))
        theta = _apart(theta, sig)
    params = sorted(set().union(*(free_vars(c).params for c in s.ctx)) | free_vars(s.gamma).params)
    checked = 0
    exhaustive = True
    for size in range(1, max_size + 1):
        if limit is not None and count_structures(sig, size) > limit:
            exhaustive = False
        for M in enumerate_structures(sig, size, limit):
            checked += 1
            if theta is not None and not check_theta_closed(GeneralModel(structure=M), theta).closed:
                continue
            for values in itertools.product(M.domain, repeat=len(params)):
                h = dict(zip(params, values))
                if not all(eval_sentence(M, h, c) for c in s.ctx):
                    continue
                if not eval_entailment(M, s.gamma, h, s.phi):
                    logger.info("sequent fails in %s of size %d", M.name, size)
                    return SequentVerdict(
                        valid=False, max_size=max_size, counterexample=M,
                        assignment=h, structures_checked=checked,
                    )
    return SequentVerdict(valid=True, max_size=max_size, structures_checked=checked, exhaustive=exhaustive)


def holds_in_general_model(G: GeneralModel, s: Sequent, var_universe: Optional[Iterable[str]] = None) -> bool:
    """Whether ``s`` holds in one general model.

    For every parameter assignment satisfying the context, the team ``gamma``
    defines over ``var_universe`` (by default the free team variables of
    ``gamma`` and ``phi``) must satisfy ``phi`` in ``G``.

    Raises:
        NotInFamilyError: ``gamma`` defines a team an explicit family lacks
    """
    M = G.structure
    variables = (
        sorted(set(var_universe)) if var_universe is not None
        else sorted(free_vars(s.gamma).team | free_vars(s.phi).team)
    )
    params = sorted(set().union(*(free_vars(c).params for c in s.ctx)) | free_vars(s.gamma).params)
    for values in itertools.product(M.domain, repeat=len(params)):
        h = dict(zip(params, values))
        if not all(eval_sentence(M, h, c) for c in s.ctx):
            continue
        if not G.satisfies(team_of_definition(M, s.gamma, h, variables), s.phi):
            return False
    return True
