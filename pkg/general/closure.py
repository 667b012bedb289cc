"""Bounded check that an explicit family is closed under first order definability.

Formulas are built bottom-up by size over team variables from a fixed
universe, element parameters and the relation parameters ``Rel(X)`` of the
family's teams.  Each formula is identified with its truth table over the
assignments to the whole universe, so formulas that can only define the same
teams are explored once.
"""

import itertools
import logging
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from pydantic import BaseModel, Field

from model import ElementTuple, Structure, Team, team_to_text
from syntax import (
    And,
    Equal,
    Exists,
    FoFormula,
    Forall,
    Not,
    Or,
    ParamVar,
    RelAtom,
    TeamVar,
    Term,
    free_vars,
    relation_symbols,
    to_text,
)

from .models import FamilyKind, GeneralModel

logger = logging.getLogger(__name__)

Table = FrozenSet[int]


class ClosureVerdict(BaseModel):
    """``closed`` or the first definable team missing from the family.

    Variables of the missing team that ``formula`` does not use are bound by
    vacuous existential quantifiers, so the formula lists the whole domain.
    """

    closed: bool
    formula: Optional[str] = None
    parameters: Dict[str, str] = Field(default_factory=dict)
    team: Optional[str] = None
    formulas_checked: int = 0


class _Candidate:
    __slots__ = ("formula", "table", "free")

    def __init__(self, formula: FoFormula, table: Table, free: FrozenSet[str]):
        self.formula = formula
        self.table = table
        self.free = free


class _Space:
    """Assignments to the universe and the truth tables of formulas over them."""

    def __init__(self, M: Structure, universe: Tuple[str, ...]):
        self.M = M
        self.universe = universe
        self.rows: List[ElementTuple] = list(itertools.product(M.domain, repeat=len(universe)))
        self.position = {row: i for i, row in enumerate(self.rows)}
        self.everything: Table = frozenset(range(len(self.rows)))

    def quantify(self, table: Table, var: str, existential: bool) -> Table:
        at = self.universe.index(var)
        out = set()
        for i, row in enumerate(self.rows):
            hits = (
                self.position[row[:at] + (m,) + row[at + 1:]] in table
                for m in self.M.domain
            )
            if (any(hits) if existential else all(hits)):
                out.add(i)
        return frozenset(out)

    def team(self, table: Table, variables: Tuple[str, ...]) -> Team:
        cols = [self.universe.index(v) for v in variables]
        return Team(variables, frozenset(tuple(self.rows[i][c] for c in cols) for i in table))


def _atoms(
    space: _Space,
    relations: Dict[str, FrozenSet[ElementTuple]],
    arities: Dict[str, int],
    params: Dict[str, str],
) -> Iterator[_Candidate]:
    terms: List[Term] = [TeamVar(v) for v in space.universe] + [ParamVar(p) for p in params]

    def value(term: Term, row: ElementTuple) -> str:
        if isinstance(term, TeamVar):
            return row[space.universe.index(term.name)]
        return params[term.name]

    for a, b in itertools.combinations_with_replacement(terms, 2):
        phi = Equal(a, b)
        table = frozenset(i for i, row in enumerate(space.rows) if value(a, row) == value(b, row))
        yield _Candidate(phi, table, free_vars(phi).team)
    for name in sorted(relations):
        for args in itertools.product(terms, repeat=arities[name]):
            phi = RelAtom(name, tuple(args))
            table = frozenset(
                i for i, row in enumerate(space.rows)
                if tuple(value(t, row) for t in args) in relations[name]
            )
            yield _Candidate(phi, table, free_vars(phi).team)


def _domains(universe: Tuple[str, ...], free: FrozenSet[str]) -> Iterator[Tuple[str, ...]]:
    rest = [v for v in universe if v not in free]
    for k in range(len(rest) + 1):
        for extra in itertools.combinations(rest, k):
            yield tuple(sorted(free | set(extra)))


def check_general_closure(G: GeneralModel, var_universe: Iterable[str], bound: int) -> ClosureVerdict:
    """Search formulas up to ``bound`` nodes for a definable team missing from ``G``'s family.

    Args:
        G: the general model; implicit families are closed by construction
        var_universe: team variables the formulas may use
        bound: maximal formula size, at least 1

    Returns:
        ``closed=True`` when no formula within the bound defines a missing team
    """
    if bound <= 0:
        raise ValueError(f"formula size bound must be positive, got {bound}")
    if G.kind != FamilyKind.EXPLICIT:
        return ClosureVerdict(closed=True)
    M = G.structure
    universe = tuple(sorted(set(var_universe)))
    space = _Space(M, universe)
    family = G.teams

    params = {f"m{i}": e for i, e in enumerate(M.domain)}
    relations: Dict[str, FrozenSet[ElementTuple]] = dict(M.relations)
    arities: Dict[str, int] = dict(M.signature.relations)
    rel_params: Dict[str, str] = {}
    ordered = sorted(family, key=lambda T: (T.variables, len(T), T.sorted_rows(M.index)))
    for i, X in enumerate(ordered, start=1):
        name = f"Rel{i}"
        relations[name] = X.rows
        arities[name] = len(X.variables)
        rel_params[name] = team_to_text(X, name, M.index)

    seen = set()
    levels: Dict[int, List[_Candidate]] = {}
    checked = 0

    def admit(candidate: _Candidate) -> Optional[ClosureVerdict]:
        nonlocal checked
        key = (candidate.table, candidate.free)
        if key in seen:
            return None
        seen.add(key)
        checked += 1
        for variables in _domains(universe, candidate.free):
            team = space.team(candidate.table, variables)
            if team not in family:
                witness = candidate.formula
                for var in reversed([v for v in variables if v not in candidate.free]):
                    witness = Exists(var, witness)
                used_params = free_vars(witness).params
                used_rels = relation_symbols(witness) & set(rel_params)
                parameters = {"$" + p: params[p] for p in sorted(used_params)}
                parameters.update({r: rel_params[r] for r in sorted(used_rels)})
                logger.info("closure violation after %d formulas: %s", checked, to_text(witness))
                return ClosureVerdict(
                    closed=False,
                    formula=to_text(witness),
                    parameters=parameters,
                    team=team_to_text(team, "missing", M.index),
                    formulas_checked=checked,
                )
        return None

    for size in range(1, bound + 1):
        fresh: List[_Candidate] = []
        if size == 1:
            produced: Iterable[_Candidate] = _atoms(space, relations, arities, params)
        else:
            produced = _compose(space, levels, size)
        for candidate in produced:
            before = len(seen)
            verdict = admit(candidate)
            if verdict is not None:
                return verdict
            if len(seen) > before:
                fresh.append(candidate)
        levels[size] = fresh
        logger.debug("closure search: %d new formulas of size %d", len(fresh), size)
    return ClosureVerdict(closed=True, formulas_checked=checked)


def _compose(space: _Space, levels: Dict[int, List[_Candidate]], size: int) -> Iterator[_Candidate]:
    for c in levels.get(size - 1, []):
        yield _Candidate(Not(c.formula), space.everything - c.table, c.free)
        for var in space.universe:
            yield _Candidate(Exists(var, c.formula), space.quantify(c.table, var, True), c.free - {var})
            yield _Candidate(Forall(var, c.formula), space.quantify(c.table, var, False), c.free - {var})
    for left_size in range(1, size - 1):
        right_size = size - 1 - left_size
        for a in levels.get(left_size, []):
            for b in levels.get(right_size, []):
                yield _Candidate(And(a.formula, b.formula), a.table & b.table, a.free | b.free)
                yield _Candidate(Or(a.formula, b.formula), a.table | b.table, a.free | b.free)
