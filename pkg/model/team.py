"""Teams: sets of assignments over a common, explicitly stored variable domain."""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .errors import TeamDomainError
from .structure import Element, ElementTuple, Structure

logger = logging.getLogger(__name__)

Assignment = Dict[str, Element]
ParamAssignment = Dict[str, Element]


@dataclass(frozen=True, slots=True)
class Team:
    """Rows are tuples aligned with ``variables``, which are kept sorted.

    The empty team over ``("x",)`` and the empty team over ``("x", "y")`` are
    different values.
    """

    variables: Tuple[str, ...]
    rows: FrozenSet[ElementTuple]

    def __post_init__(self) -> None:
        if list(self.variables) != sorted(set(self.variables)):
            raise TeamDomainError(f"team variables must be sorted and distinct, got {self.variables}")
        width = len(self.variables)
        for row in self.rows:
            if len(row) != width:
                raise TeamDomainError(f"row {row} does not fit variables {self.variables}")

    @classmethod
    def of(cls, variables: Sequence[str], rows: Iterable[Sequence[Element]] = ()) -> "Team":
        """Build a team from rows given in the order of ``variables``."""
        order = sorted(variables)
        if len(set(order)) != len(order):
            raise TeamDomainError(f"duplicate team variables in {tuple(variables)}")
        perm = [list(variables).index(v) for v in order]
        built = set()
        for row in rows:
            if len(row) != len(order):
                raise TeamDomainError(f"row {tuple(row)} does not fit variables {tuple(variables)}")
            built.add(tuple(row[i] for i in perm))
        return cls(tuple(order), frozenset(built))

    @classmethod
    def empty(cls, variables: Iterable[str] = ()) -> "Team":
        return cls(tuple(sorted(set(variables))), frozenset())

    @classmethod
    def from_assignments(cls, variables: Iterable[str], assignments: Iterable[Mapping[str, Element]]) -> "Team":
        order = tuple(sorted(set(variables)))
        return cls(order, frozenset(tuple(s[v] for v in order) for s in assignments))

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def domain(self) -> FrozenSet[str]:
        return frozenset(self.variables)

    def column(self, var: str) -> int:
        try:
            return self.variables.index(var)
        except ValueError:
            raise TeamDomainError(f"{var} is not in the team domain {self.variables}") from None

    def assignments(self, order: Optional[Mapping[Element, int]] = None) -> Iterator[Assignment]:
        for row in self.sorted_rows(order):
            yield dict(zip(self.variables, row))

    def sorted_rows(self, order: Optional[Mapping[Element, int]] = None) -> List[ElementTuple]:
        """Rows in a deterministic order: by element index when ``order`` is given."""
        if order is None:
            return sorted(self.rows)
        return sorted(self.rows, key=lambda r: tuple(order[e] for e in r))

    def with_rows(self, rows: Iterable[ElementTuple]) -> "Team":
        return Team(self.variables, frozenset(rows))

    def __str__(self) -> str:
        body = " ".join("(" + ", ".join(r) + ")" for r in self.sorted_rows())
        return f"({', '.join(self.variables)}) {{{body}}}"


def full_team(M: Structure, variables: Iterable[str]) -> Team:
    order = tuple(sorted(set(variables)))
    return Team(order, frozenset(itertools.product(M.domain, repeat=len(order))))


def team_restrict(X: Team, variables: Iterable[str]) -> Team:
    """Pointwise restriction of every row to ``variables``."""
    keep = sorted(set(variables))
    if not set(keep) <= X.domain:
        raise TeamDomainError(f"cannot restrict a team over {X.variables} to {tuple(keep)}")
    cols = [X.column(v) for v in keep]
    return Team(tuple(keep), frozenset(tuple(row[c] for c in cols) for row in X.rows))


def team_extend_universal(M: Structure, X: Team, x: str) -> Team:
    """``X[M/x]``: every row paired with every value for ``x``."""
    base = team_restrict(X, X.domain - {x})
    variables = tuple(sorted(base.domain | {x}))
    at = variables.index(x)
    rows = frozenset(row[:at] + (m,) + row[at:] for row in base.rows for m in M.domain)
    return Team(variables, rows)


def is_x_variation(X: Team, X2: Team, x: str) -> bool:
    """Whether ``X2`` is an x-variation of ``X``."""
    if X2.domain != X.domain | {x}:
        return False
    rest = X.domain - {x}
    return team_restrict(X, rest) == team_restrict(X2, rest)


def _nonempty_subsets(M: Structure) -> List[Tuple[Element, ...]]:
    out: List[Tuple[Element, ...]] = []
    for k in range(1, M.size + 1):
        out.extend(itertools.combinations(M.domain, k))
    return out


def enumerate_x_variations(M: Structure, X: Team, x: str) -> Iterator[Team]:
    """Every x-variation of ``X``, lazily and in a fixed order.

    Each row of ``X`` restricted away from ``x`` independently picks a
    nonempty set of values for ``x``.
    """
    base = team_restrict(X, X.domain - {x})
    variables = tuple(sorted(base.domain | {x}))
    at = variables.index(x)
    base_rows = base.sorted_rows(M.index)
    choices = _nonempty_subsets(M)
    for picks in itertools.product(choices, repeat=len(base_rows)):
        rows = frozenset(
            row[:at] + (m,) + row[at:]
            for row, values in zip(base_rows, picks)
            for m in values
        )
        yield Team(variables, rows)


def count_x_variations(M: Structure, X: Team, x: str) -> int:
    base = team_restrict(X, X.domain - {x})
    return (2 ** M.size - 1) ** len(base)


def all_teams(M: Structure, variables: Iterable[str]) -> Iterator[Team]:
    """Every team over ``variables``, smallest first."""
    order = tuple(sorted(set(variables)))
    universe = sorted(itertools.product(M.domain, repeat=len(order)), key=lambda r: tuple(M.index[e] for e in r))
    for k in range(len(universe) + 1):
        for rows in itertools.combinations(universe, k):
            yield Team(order, frozenset(rows))


def subteams(X: Team, order: Optional[Mapping[Element, int]] = None) -> Iterator[Team]:
    rows = X.sorted_rows(order)
    for k in range(len(rows) + 1):
        for chosen in itertools.combinations(rows, k):
            yield X.with_rows(chosen)


def row_assignment(X: Team, row: ElementTuple) -> Assignment:
    return dict(zip(X.variables, row))
