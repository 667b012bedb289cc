"""Conversions between first order team definitions and teams."""

import itertools
from typing import Iterable, Mapping, Optional, Tuple

from syntax import BOTTOM, Equal, FoFormula, ParamVar, TeamVar, conjoin, disjoin, free_vars

from .errors import TeamDomainError, UnboundVariableError
from .evaluation import eval_fo
from .structure import Element, Structure
from .team import ParamAssignment, Team


def team_of_definition(
    M: Structure,
    gamma: FoFormula,
    h: Mapping[str, Element],
    variables: Iterable[str],
) -> Team:
    """``||gamma||_{M,h}``: the assignments over ``variables`` that satisfy ``gamma``."""
    order = tuple(sorted(set(variables)))
    team_free, param_free = free_vars(gamma)
    if not team_free <= set(order):
        raise TeamDomainError(f"free variables {sorted(team_free - set(order))} are outside {order}")
    missing = param_free - set(h)
    if missing:
        raise UnboundVariableError(f"parameters {sorted('$' + p for p in missing)} are unassigned")
    rows = frozenset(
        row
        for row in itertools.product(M.domain, repeat=len(order))
        if eval_fo(M, h, dict(zip(order, row)), gamma)
    )
    return Team(order, rows)


def canonical_team_definition(
    X: Team,
    param_prefix: str = "q",
    start: int = 1,
    order: Optional[Mapping[Element, int]] = None,
) -> Tuple[FoFormula, ParamAssignment]:
    """The diagram of ``X``: one equality conjunction per row, with fresh parameters.

    Parameters are named ``$<prefix><k>`` counting from ``start`` across rows.
    The empty team gives ``false``; the team holding the empty assignment gives
    ``true``.
    """
    if not X.rows:
        return BOTTOM, {}
    h: ParamAssignment = {}
    k = start
    disjuncts = []
    for row in X.sorted_rows(order):
        parts = []
        for var, value in zip(X.variables, row):
            name = f"{param_prefix}{k}"
            k += 1
            h[name] = value
            parts.append(Equal(TeamVar(var), ParamVar(name)))
        disjuncts.append(conjoin(parts))
    return disjoin(disjuncts), h
