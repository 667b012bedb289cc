"""Dependency atoms evaluated on a whole team."""

from collections import defaultdict
from typing import Dict, Set, Tuple

from model import ElementTuple, Structure, Team, UnboundVariableError, eval_term
from syntax import Term, TermTuple, free_vars, tuple_to_text


def _check_terms(X: Team, terms: TermTuple) -> None:
    team_vars, params = free_vars(terms)
    if params:
        raise UnboundVariableError(f"parameter variables in ({tuple_to_text(terms)})")
    missing = team_vars - X.domain
    if missing:
        raise UnboundVariableError(f"variables {sorted(missing)} are not in the team domain {X.variables}")


def _values(M: Structure, X: Team, row: ElementTuple, terms: TermTuple) -> ElementTuple:
    s = dict(zip(X.variables, row))
    return tuple(eval_term(M, {}, s, t) for t in terms)


def sat_independence_atom(M: Structure, X: Team, t1: TermTuple, t2: TermTuple, t3: TermTuple) -> bool:
    """Whether ``indep(t1 ; t2 ; t3)`` holds in ``X``.

    For rows ``s, s'`` agreeing on ``t1`` some row must carry the ``t1 t2``
    values of ``s`` together with the ``t1 t3`` values of ``s'``.  Grouping
    rows by their ``t1`` value turns that into: every combination of a
    ``t2`` value and a ``t3`` value seen in a group occurs together in it.
    """
    _check_terms(X, t1 + t2 + t3)
    seen: Set[Tuple[ElementTuple, ElementTuple, ElementTuple]] = set()
    second: Dict[ElementTuple, Set[ElementTuple]] = defaultdict(set)
    third: Dict[ElementTuple, Set[ElementTuple]] = defaultdict(set)
    for row in X.rows:
        v1, v2, v3 = _values(M, X, row, t1), _values(M, X, row, t2), _values(M, X, row, t3)
        seen.add((v1, v2, v3))
        second[v1].add(v2)
        third[v1].add(v3)
    for v1 in second:
        for v2 in second[v1]:
            for v3 in third[v1]:
                if (v1, v2, v3) not in seen:
                    return False
    return True


def functional_dependency_holds(M: Structure, X: Team, determinants: TermTuple, dependent: Term) -> bool:
    """Rows that agree on ``determinants`` agree on ``dependent``."""
    _check_terms(X, determinants + (dependent,))
    image: Dict[ElementTuple, ElementTuple] = {}
    for row in X.rows:
        key = _values(M, X, row, determinants)
        value = _values(M, X, row, (dependent,))
        if image.setdefault(key, value) != value:
            return False
    return True
