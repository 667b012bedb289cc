"""Given-clause binary resolution with factoring and subsumption.

The loop keeps the two lists of the classic Otter main loop: a
``set_of_support`` of clauses not yet selected and a ``usable`` list of
clauses that have been.  Each round selects the lightest supported clause,
resolves it against everything usable and moves it over.
"""

import heapq
import itertools
import logging
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, List, Set, Tuple

from .clauses import (
    Clause,
    clause_depth,
    normalize,
    rename_clause,
    simplify,
    substitute_clause,
    subsumes,
    unify_args,
    weight,
)

logger = logging.getLogger(__name__)

MAX_LITERALS = 10
MAX_KEPT = 4000


class SearchOutcome(str, Enum):
    REFUTED = "refuted"
    SATURATED = "saturated"
    INCOMPLETE = "incomplete"
    TIMEOUT = "timeout"


@dataclass
class SearchResult:
    outcome: SearchOutcome
    generated: int = 0
    selected: int = 0


@dataclass
class _SearchState:
    set_of_support: List[Tuple[int, int, Clause]] = field(default_factory=list)
    usable: List[Clause] = field(default_factory=list)
    kept: Set[Clause] = field(default_factory=set)
    generated: int = 0
    selected: int = 0
    truncated: bool = False


def resolvents(given: Clause, partner: Clause) -> Iterator[Clause]:
    """Binary resolvents of two clauses, standardized apart."""
    other = rename_clause(partner, "'")
    for lit in given:
        for opp in other:
            if lit[0] == opp[0] or lit[1] != opp[1]:
                continue
            sub = unify_args(lit, opp, {})
            if sub is None:
                continue
            yield substitute_clause((given - {lit}) | (other - {opp}), sub)


def factors(clause: Clause) -> Iterator[Clause]:
    for a, b in itertools.combinations(sorted(clause, key=repr), 2):
        if a[0] != b[0]:
            continue
        sub = unify_args(a, b, {})
        if sub is not None:
            yield substitute_clause(clause, sub)


def refute(
    clauses: Iterable[Clause],
    depth_limit: int,
    deadline: float,
    max_kept: int = MAX_KEPT,
) -> SearchResult:
    """Search for the empty clause.

    Clauses with terms nested deeper than ``depth_limit`` or with more than
    ``MAX_LITERALS`` literals are discarded, which makes the search
    incomplete; ``SATURATED`` is only reported when nothing was discarded.
    """
    state = _SearchState()
    serial = itertools.count()

    def admit(candidate: Clause) -> bool:
        """Keep a new clause; true when it is the empty clause."""
        state.generated += 1
        simple = simplify(candidate)
        if simple is None:
            return False
        if not simple:
            return True
        if len(simple) > MAX_LITERALS or clause_depth(simple) > depth_limit:
            state.truncated = True
            return False
        simple = normalize(simple)
        if simple in state.kept or any(subsumes(u, simple) for u in state.usable):
            return False
        state.kept.add(simple)
        heapq.heappush(state.set_of_support, (weight(simple), next(serial), simple))
        return False

    def result(outcome: SearchOutcome) -> SearchResult:
        logger.debug(
            "resolution at depth %d: %s after %d generated, %d selected",
            depth_limit, outcome.value, state.generated, state.selected,
        )
        return SearchResult(outcome, state.generated, state.selected)

    for clause in clauses:
        if admit(clause):
            return result(SearchOutcome.REFUTED)

    while state.set_of_support:
        if time.monotonic() > deadline:
            return result(SearchOutcome.TIMEOUT)
        _, _, given = heapq.heappop(state.set_of_support)
        if any(subsumes(u, given) for u in state.usable):
            continue
        state.usable = [u for u in state.usable if not subsumes(given, u)]
        state.usable.append(given)
        state.selected += 1
        for f in factors(given):
            if admit(f):
                return result(SearchOutcome.REFUTED)
        for partner in list(state.usable):
            for r in resolvents(given, partner):
                if admit(r):
                    return result(SearchOutcome.REFUTED)
            if time.monotonic() > deadline:
                return result(SearchOutcome.TIMEOUT)
        if len(state.kept) > max_kept:
            state.truncated = True
            break

    return result(SearchOutcome.INCOMPLETE if state.truncated else SearchOutcome.SATURATED)
