"""Relation existence theories and the check that a general model is closed under them.

File format::

    theta T {
      exists R/1 : "((exists x. R(x)) & (exists x. not R(x)))"
      exists R/1, S/2 : "forall x. (R(x) -> exists y. S(x, y))"
    }
"""

import itertools
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, FrozenSet, List, Optional, Tuple, Union

from pydantic import BaseModel

from model import ElementTuple, FileFormatError, Scanner, eval_sentence
from syntax import FoFormula, ParseError, Signature, free_vars, parse_fo, symbols_of, to_text

from .models import FamilyKind, GeneralModel

logger = logging.getLogger(__name__)


class ThetaError(ValueError):
    """A malformed relation existence sentence or an impossible check."""


@dataclass(frozen=True, slots=True)
class ThetaSentence:
    """``exists R1 ... Rn . body`` with ``relation_vars`` as (name, arity) pairs."""

    relation_vars: Tuple[Tuple[str, int], ...]
    body: FoFormula

    def __post_init__(self) -> None:
        team_vars, params = free_vars(self.body)
        if team_vars or params:
            raise ThetaError(f"sentence body {to_text(self.body)} has free variables")
        names = [n for n, _ in self.relation_vars]
        if len(set(names)) != len(names):
            raise ThetaError(f"relation variables {names} are not distinct")


@dataclass(frozen=True, slots=True)
class Theta:
    name: str = "Theta"
    sentences: Tuple[ThetaSentence, ...] = ()


class ThetaVerdict(BaseModel):
    closed: bool
    violation: Optional[int] = None


def sentence_to_text(sentence: ThetaSentence) -> str:
    rels = ", ".join(f"{n}/{a}" for n, a in sentence.relation_vars)
    return f'exists {rels} : "{to_text(sentence.body)}"'


def theta_to_text(theta: Theta) -> str:
    lines = [f"theta {theta.name} {{"]
    lines.extend("  " + sentence_to_text(s) for s in theta.sentences)
    lines.append("}")
    return "\n".join(lines)


def parse_theta(source: Union[str, Path], sig: Optional[Signature] = None) -> Theta:
    """Read a theory; bodies are quoted first order formulas.

    With ``sig`` the bodies are read against the structure signature extended
    by the relation variables.  Without it, names a body leaves free are
    constants.
    """
    if isinstance(source, Path):
        text, origin = source.read_text(), str(source)
    else:
        text, origin = source, "<input>"
    sc = Scanner(text, origin)
    sc.expect("theta")
    name = sc.word()
    sc.expect("{")
    sentences: List[ThetaSentence] = []
    while not sc.at("}"):
        line = sc.line
        sc.expect("exists")
        rels: List[Tuple[str, int]] = []
        while True:
            rel = sc.word()
            sc.expect("/")
            rels.append((rel, sc.integer()))
            if not sc.at(","):
                break
            sc.next()
        sc.expect(":")
        body_text = sc.string()
        try:
            body = _parse_body(body_text, rels, sig)
            sentences.append(ThetaSentence(tuple(rels), body))
        except (ParseError, ThetaError) as exc:
            raise FileFormatError(str(exc), line, origin) from exc
    sc.expect("}")
    if not sc.at_end():
        raise sc.error("unexpected text after the theory")
    return Theta(name, tuple(sentences))


def _parse_body(text: str, rels: List[Tuple[str, int]], sig: Optional[Signature]) -> FoFormula:
    if sig is not None:
        return parse_fo(text, sig.with_relations(dict(rels)))
    body = parse_fo(text)
    for rel, arity in rels:
        used = _arity_in(body, rel)
        if used is not None and used != arity:
            raise ThetaError(f"relation variable {rel}/{arity} is used with arity {used}")
    names = free_vars(body).team
    if not names:
        return body
    return parse_fo(text, symbols_of(body).merge(Signature(constants=frozenset(names))))


def _arity_in(body: FoFormula, rel: str) -> Optional[int]:
    return symbols_of(body).relations.get(rel)


def _candidates(G: GeneralModel, arity: int) -> List[FrozenSet[ElementTuple]]:
    M = G.structure
    if G.kind != FamilyKind.EXPLICIT:
        tuples = list(itertools.product(M.domain, repeat=arity))
        return [frozenset(c) for k in range(len(tuples) + 1) for c in itertools.combinations(tuples, k)]
    tables = {X.rows for X in G.teams if len(X.variables) == arity}
    return sorted(tables, key=lambda t: (len(t), sorted(tuple(M.index[e] for e in r) for r in t)))


def check_theta_closed(G: GeneralModel, theta: Theta) -> ThetaVerdict:
    """Whether every sentence of ``theta`` is witnessed by relations of the form ``Rel(X)``, ``X`` in the family.

    Implicit families over a finite structure contain every team, so any
    relation of the right arity is a candidate.
    """
    M = G.structure
    for index, sentence in enumerate(theta.sentences):
        clash = {n for n, _ in sentence.relation_vars} & (
            set(M.signature.relations) | set(M.signature.functions) | set(M.signature.constants)
        )
        if clash:
            raise ThetaError(f"relation variables {sorted(clash)} are already symbols of {M.name}")
        arities: Dict[str, int] = dict(sentence.relation_vars)
        pools = [_candidates(G, a) for _, a in sentence.relation_vars]
        found = False
        for choice in itertools.product(*pools):
            expanded = M.expand(dict(zip(arities, choice)), arities)
            if eval_sentence(expanded, {}, sentence.body):
                found = True
                break
        if not found:
            logger.info("theory %s: sentence %d has no witness in %s", theta.name, index, M.name)
            return ThetaVerdict(closed=False, violation=index)
    return ThetaVerdict(closed=True)
