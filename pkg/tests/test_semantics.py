"""Tests for team semantics and general team semantics."""

import pytest

from model import Team, TeamDomainError, parse_teams, team_restrict
from semantics import (
    NotInFamilyError,
    TeamEvaluator,
    eval_full,
    eval_gts,
    functional_dependency_holds,
    sat_independence_atom,
)
from syntax import TeamVar, free_vars, parse_il

x, y = TeamVar("x"), TeamVar("y")
BOTH = Team.of(("x",), [("0",), ("1",)])


def test_independence_on_product_and_diagonal(two_element, product_team, diagonal_team):
    """x and y are independent in the product team but not on the diagonal."""
    phi = parse_il("indep( ; x ; y)")
    assert eval_full(two_element, product_team, phi)
    assert not eval_full(two_element, diagonal_team, phi)
    assert sat_independence_atom(two_element, product_team, (), (x,), (y,))


def test_dependence_on_diagonal(two_element, product_team, diagonal_team):
    assert eval_full(two_element, diagonal_team, parse_il("dep(x, y)"))
    assert not eval_full(two_element, product_team, parse_il("dep(x, y)"))
    assert eval_full(two_element, diagonal_team, parse_il("indep(x ; y ; y)"))
    assert functional_dependency_holds(two_element, diagonal_team, (x,), y)


def test_conditional_independence(two_element):
    """Given x, y and z are independent when every combination occurs."""
    X = Team.of(("x", "y", "z"), [("0", "0", "0"), ("0", "1", "1"), ("1", "0", "0")])
    assert not eval_full(two_element, X, parse_il("indep(x ; y ; z)"))
    X2 = X.with_rows(X.rows | {("0", "0", "1"), ("0", "1", "0")})
    assert eval_full(two_element, X2, parse_il("indep(x ; y ; z)"))


def test_literals_hold_row_by_row(two_element, product_team):
    assert eval_full(two_element, product_team, parse_il("x = x"))
    assert not eval_full(two_element, product_team, parse_il("P(x)"))
    assert eval_full(two_element, product_team.with_rows({("0", "1")}), parse_il("(P(x) /\\ R(x, y))"))


def test_empty_team_satisfies_everything(two_element):
    empty = Team.empty(("x", "y"))
    for text in ["P(x)", "(x != x /\\ dep(y))", "indep( ; x ; y)", "exists y. ~R(x, y)"]:
        assert eval_full(two_element, empty, parse_il(text))


def test_split_disjunction(two_element):
    """Each half of a split may be constant even when the whole team is not."""
    assert not eval_full(two_element, BOTH, parse_il("dep(x)"))
    assert eval_full(two_element, BOTH, parse_il("(dep(x) \\/ dep(x))"))
    assert eval_full(two_element, BOTH, parse_il("(P(x) \\/ ~P(x))"))


def test_split_witness_is_a_cover(two_element):
    evaluator = TeamEvaluator(two_element)
    Y, Z = evaluator.split_witness(BOTH, parse_il("(P(x) \\/ ~P(x))"))
    assert Y.rows | Z.rows == BOTH.rows
    assert Y.rows == frozenset({("0",)})


def test_existential_picks_a_variation(two_element):
    assert eval_full(two_element, BOTH, parse_il("exists y. (R(x, y) /\\ dep(x, y))"))
    assert not eval_full(two_element, BOTH, parse_il("exists y. (R(y, x) /\\ dep(y))"))


def test_universal_extends_the_team(two_element):
    assert eval_full(two_element, BOTH, parse_il("forall y. indep( ; x ; y)"))
    assert not eval_full(two_element, BOTH, parse_il("forall y. dep(x, y)"))


@pytest.mark.parametrize("text", [
    "indep( ; x ; y)",
    "(dep(x) \\/ P(y))",
    "exists z. (dep(x, z) /\\ z = y)",
])
def test_locality(two_element, text):
    """Variables outside the formula do not matter."""
    X = Team.of(("x", "y", "z"), [("0", "1", "0"), ("1", "1", "1"), ("1", "0", "0")])
    phi = parse_il(text)
    assert eval_full(two_element, X, phi) == eval_full(two_element, team_restrict(X, free_vars(phi).team), phi)


def test_free_variables_must_be_in_the_team(two_element):
    with pytest.raises(TeamDomainError):
        eval_full(two_element, BOTH, parse_il("P(y)"))


def test_general_semantics_draws_splits_from_the_family(two_element):
    """Without the singleton teams the disjunction has no admissible split."""
    sparse = [BOTH, Team.empty(("x",))]
    phi = parse_il("(dep(x) \\/ dep(x))")
    assert not eval_gts(two_element, sparse, BOTH, phi)
    richer = sparse + [Team.of(("x",), [("0",)]), Team.of(("x",), [("1",)])]
    assert eval_gts(two_element, richer, BOTH, phi)


def test_general_semantics_on_family_file(corpus_dir, two_element):
    teams = parse_teams(corpus_dir / "teams" / "family.team", two_element)
    family = list(teams.values()) + [Team.empty(("x", "y"))]
    assert eval_gts(two_element, family, teams["X"], parse_il("exists y. dep(x, y)"))
    assert not eval_gts(two_element, family, teams["X"], parse_il("exists y. y != x"))
    assert eval_full(two_element, teams["X"], parse_il("exists y. y != x"))


def test_general_semantics_needs_a_member(two_element, product_team):
    with pytest.raises(NotInFamilyError):
        eval_gts(two_element, [BOTH], product_team, parse_il("x = x"))
