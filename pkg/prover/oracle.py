"""The first order entailment oracle behind PS-ent obligations."""

import logging
import time
from functools import lru_cache
from typing import FrozenSet, Iterable, List, Union

from syntax import FoFormula, Implies, Not, big_and, free_vars, to_text, universal_closure

from .clauses import ClauseExplosion, clausify, equality_axioms, uses_equality
from .countermodel import find_countermodel
from .search import SearchOutcome, refute
from .verdicts import Budget, ProverVerdict

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = Budget()


def prove_entailment(
    premises: Iterable[FoFormula],
    goals: Iterable[FoFormula],
    budget: Budget = DEFAULT_BUDGET,
) -> ProverVerdict:
    """Decide ``/\\ premises |= /\\ goals`` within ``budget``.

    Parameter variables are fresh constants.  Free team variables, which
    sequent contexts never have, are read universally over the whole
    entailment.  ``Proved`` comes only from a resolution refutation and
    ``Refuted`` only from a countermodel that was re-evaluated; anything
    else is ``Unknown``.
    """
    return _prove(frozenset(premises), frozenset(goals), budget)


@lru_cache(maxsize=2048)
def _prove(premises: FrozenSet[FoFormula], goals: FrozenSet[FoFormula], budget: Budget) -> ProverVerdict:
    ordered_premises = sorted(premises, key=to_text)
    ordered_goals = sorted(goals, key=to_text)
    if any(free_vars(phi).team for phi in ordered_premises + ordered_goals):
        ordered_goals = [universal_closure(Implies(big_and(ordered_premises), big_and(ordered_goals)))]
        ordered_premises = []

    reason = _search(ordered_premises, ordered_goals, budget)
    if isinstance(reason, ProverVerdict):
        return reason

    if budget.cm_size >= 1:
        deadline = time.monotonic() + budget.ms / 1000
        found = find_countermodel([*ordered_premises, Not(big_and(ordered_goals))], budget.cm_size, deadline)
        if found is not None:
            M, h = found
            logger.debug("entailment refuted by a structure of size %d", M.size)
            return ProverVerdict.refuted(M, h)
        reason += f"; no countermodel up to size {budget.cm_size}"
    logger.warning("entailment left open: %s", reason)
    return ProverVerdict.unknown(reason)


def _search(premises: List[FoFormula], goals: List[FoFormula], budget: Budget) -> Union[ProverVerdict, str]:
    """A ``Proved`` verdict, or the reason the refutation search stopped.

    Each goal is refuted on its own against the premises; goals that are
    premises already need no search.  All goals share one deadline.
    """
    if budget.depth <= 0:
        return "resolution depth budget is zero"
    deadline = time.monotonic() + budget.ms / 1000
    known = set(premises)
    steps = 0
    for goal in goals:
        if goal in known:
            continue
        outcome = _refute_goal(premises, goal, budget, deadline)
        if isinstance(outcome, str):
            return outcome
        steps += outcome
    return ProverVerdict.proved(steps)


def _refute_goal(premises: List[FoFormula], goal: FoFormula, budget: Budget, deadline: float) -> Union[int, str]:
    """Generated clause count of a refutation of ``premises, not goal``, or why none was found."""
    try:
        clauses = clausify(premises, [goal])
    except ClauseExplosion as exc:
        return str(exc)
    with_equality = clauses + equality_axioms(clauses) if uses_equality(clauses) else None
    steps = 0
    for depth in range(1, budget.depth + 1):
        # A refutation that ignores equality is still a refutation with it.
        attempts = [clauses] if with_equality is None else [clauses, with_equality]
        for attempt in attempts:
            outcome = refute(attempt, depth, deadline)
            steps += outcome.generated
            if outcome.outcome == SearchOutcome.REFUTED:
                return steps
            if outcome.outcome == SearchOutcome.TIMEOUT:
                return f"time budget of {budget.ms} ms exhausted at depth {depth}"
        if outcome.outcome == SearchOutcome.SATURATED:
            return "clause set saturated without a refutation"
    return f"no refutation up to depth {budget.depth}"
