"""Team semantics over full models and general team semantics over explicit families."""

import logging
from collections import Counter, defaultdict
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from model import (
    Structure,
    Team,
    TeamDomainError,
    enumerate_x_variations,
    eval_fo,
    is_x_variation,
    subteams,
    team_extend_universal,
)
from syntax import (
    Conj,
    Dep,
    IlFormula,
    Indep,
    Literal,
    TeamExists,
    TeamForall,
    TensorOr,
    desugar_dep,
    free_vars,
    literal_as_fo,
    to_text,
)

from .atoms import sat_independence_atom

logger = logging.getLogger(__name__)


class NotInFamilyError(ValueError):
    """The team to evaluate on is not a member of the general model's family."""


class TeamEvaluator:
    """Memoized satisfaction checker for one structure.

    With ``family=None`` the clauses of ordinary team semantics are used.  With
    a family, disjunction splits and existential witnesses must be drawn from
    it; the universal clause extends the team whether or not the result is a
    member.
    """

    def __init__(self, M: Structure, family: Optional[Iterable[Team]] = None):
        self.M = M
        self.family: Optional[FrozenSet[Team]] = frozenset(family) if family is not None else None
        self._by_domain: Dict[Tuple[str, ...], List[Team]] = defaultdict(list)
        if self.family is not None:
            for Y in sorted(self.family, key=lambda T: (T.variables, len(T), T.sorted_rows(M.index))):
                self._by_domain[Y.variables].append(Y)
        self._memo: Dict[Tuple[IlFormula, Team], bool] = {}
        self.stats: Counter = Counter()

    def sat(self, X: Team, phi: IlFormula) -> bool:
        key = (phi, X)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        verdict = self._sat(X, phi)
        self._memo[key] = verdict
        return verdict

    def _sat(self, X: Team, phi: IlFormula) -> bool:
        match phi:
            case Literal():
                fo = literal_as_fo(phi)
                return all(eval_fo(self.M, {}, dict(zip(X.variables, row)), fo) for row in X.rows)
            case Indep(first, second, third):
                return sat_independence_atom(self.M, X, first, second, third)
            case Dep():
                return self.sat(X, desugar_dep(phi))
            case Conj(left, right):
                return self.sat(X, left) and self.sat(X, right)
            case TensorOr():
                return self.split_witness(X, phi) is not None
            case TeamExists():
                return self.variation_witness(X, phi) is not None
            case TeamForall(var, body):
                return self.sat(team_extend_universal(self.M, X, var), body)
        raise TypeError(f"not an independence logic formula: {phi!r}")

    # -- disjunction

    def _covers(self, X: Team) -> Iterator[Tuple[Team, Team]]:
        """Pairs ``(Y, Z)`` with ``Y u Z = X``; overlapping covers included."""
        if self.family is None:
            for Y in subteams(X, self.M.index):
                rest = X.rows - Y.rows
                for extra in subteams(Y, self.M.index):
                    yield Y, X.with_rows(rest | extra.rows)
            return
        inside = [Y for Y in self._by_domain.get(X.variables, []) if Y.rows <= X.rows]
        for Y in inside:
            for Z in inside:
                if Y.rows | Z.rows == X.rows:
                    yield Y, Z

    def split_witness(self, X: Team, phi: TensorOr) -> Optional[Tuple[Team, Team]]:
        """A cover ``(Y, Z)`` of ``X`` with ``Y`` satisfying the left and ``Z`` the right disjunct."""
        for Y, Z in self._covers(X):
            self.stats["splits"] += 1
            if self.sat(Y, phi.left) and self.sat(Z, phi.right):
                return Y, Z
        return None

    # -- existential

    def _variations(self, X: Team, var: str) -> Iterator[Team]:
        if self.family is None:
            yield from enumerate_x_variations(self.M, X, var)
            return
        target = tuple(sorted(X.domain | {var}))
        for Y in self._by_domain.get(target, []):
            if is_x_variation(X, Y, var):
                yield Y

    def variation_witness(self, X: Team, phi: TeamExists) -> Optional[Team]:
        """An x-variation of ``X`` satisfying the body, if there is one."""
        for Y in self._variations(X, phi.var):
            self.stats["variations"] += 1
            if self.sat(Y, phi.body):
                return Y
        return None


def _check_domain(X: Team, phi: IlFormula) -> None:
    team_vars, _ = free_vars(phi)
    if not team_vars <= X.domain:
        raise TeamDomainError(
            f"free variables {sorted(team_vars - X.domain)} of {to_text(phi)} are outside the team domain {X.variables}"
        )


def eval_full(M: Structure, X: Team, phi: IlFormula) -> bool:
    """``M |=_X phi`` in team semantics."""
    phi = desugar_dep(phi)
    _check_domain(X, phi)
    evaluator = TeamEvaluator(M)
    verdict = evaluator.sat(X, phi)
    logger.debug("eval_full %s on %d rows: %s (%s)", to_text(phi), len(X), verdict, dict(evaluator.stats))
    return verdict


def eval_gts(M: Structure, family: Iterable[Team], X: Team, phi: IlFormula) -> bool:
    """``(M, family) |=_X phi`` in general team semantics.

    Raises:
        NotInFamilyError: ``X`` is not a member of ``family``
    """
    evaluator = TeamEvaluator(M, family)
    if X not in evaluator.family:
        raise NotInFamilyError(f"team {X} is not in the family")
    phi = desugar_dep(phi)
    _check_domain(X, phi)
    verdict = evaluator.sat(X, phi)
    logger.debug("eval_gts %s on %d rows: %s (%s)", to_text(phi), len(X), verdict, dict(evaluator.stats))
    return verdict
