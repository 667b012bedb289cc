"""General models: a structure paired with a family of teams."""

import itertools
import logging
from enum import Enum
from typing import FrozenSet, Iterable, List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from model import (
    Structure,
    Team,
    all_teams,
    canonical_team_definition,
    team_of_definition,
)
from semantics import eval_full, eval_gts
from syntax import IlFormula

logger = logging.getLogger(__name__)


class FamilyKind(str, Enum):
    FULL = "full"
    LEAST = "least"
    EXPLICIT = "explicit"


def least_family(M: Structure, var_universe: Iterable[str]) -> FrozenSet[Team]:
    """Every team over every subset of ``var_universe``.

    Over a finite structure each team is defined by its diagram, so the least
    general model contains all of them; ``verify_least_collapse`` checks this.
    """
    universe = sorted(set(var_universe))
    teams = set()
    for k in range(len(universe) + 1):
        for variables in itertools.combinations(universe, k):
            teams.update(all_teams(M, variables))
    return frozenset(teams)


def verify_least_collapse(M: Structure, var_universe: Iterable[str]) -> List[Team]:
    """Teams of ``least_family`` whose diagram does not define them back; empty when the collapse holds."""
    failures = []
    for X in sorted(least_family(M, var_universe), key=lambda T: (T.variables, len(T), T.sorted_rows(M.index))):
        gamma, h = canonical_team_definition(X, order=M.index)
        if team_of_definition(M, gamma, h, X.variables) != X:
            failures.append(X)
    if failures:
        logger.warning("%d teams are not defined by their diagrams in %s", len(failures), M.name)
    return failures


class GeneralModel(BaseModel):
    """A structure with a team family.

    ``FULL`` and ``LEAST`` families are implicit; over a finite structure they
    coincide.  An ``EXPLICIT`` family must hold the empty team of every
    variable domain it uses.
    """

    model_config = ConfigDict(frozen=True)

    structure: Structure
    kind: FamilyKind = FamilyKind.FULL
    teams: FrozenSet[Team] = Field(default_factory=frozenset)

    @model_validator(mode="after")
    def check_family(self) -> "GeneralModel":
        if self.kind != FamilyKind.EXPLICIT:
            if self.teams:
                raise ValueError(f"a {self.kind.value} family is implicit and takes no teams")
            return self
        domain = set(self.structure.domain)
        for X in self.teams:
            if Team.empty(X.variables) not in self.teams:
                raise ValueError(f"explicit family lacks the empty team over {X.variables}")
            for row in X.rows:
                if not set(row) <= domain:
                    raise ValueError(f"team {X} uses elements outside the domain of {self.structure.name}")
        return self

    @classmethod
    def from_teams(cls, M: Structure, teams: Iterable[Team]) -> "GeneralModel":
        """An explicit general model, with the required empty teams added."""
        family = set(teams)
        family.update(Team.empty(X.variables) for X in list(family))
        return cls(structure=M, kind=FamilyKind.EXPLICIT, teams=frozenset(family))

    def family(self, var_universe: Optional[Iterable[str]] = None) -> FrozenSet[Team]:
        """The teams of this model; implicit families are taken over ``var_universe``."""
        if self.kind == FamilyKind.EXPLICIT:
            return self.teams
        if var_universe is None:
            raise ValueError(f"a {self.kind.value} family needs a variable universe")
        return least_family(self.structure, var_universe)

    def contains(self, X: Team) -> bool:
        if self.kind == FamilyKind.EXPLICIT:
            return X in self.teams
        return all(set(row) <= set(self.structure.domain) for row in X.rows)

    def satisfies(self, X: Team, phi: IlFormula) -> bool:
        """``(M, family) |=_X phi``."""
        if self.kind == FamilyKind.EXPLICIT:
            return eval_gts(self.structure, self.teams, X, phi)
        return eval_full(self.structure, X, phi)
