"""Tests for general models, closure checking and relation existence theories."""

import pytest

from general import (
    FamilyKind,
    GeneralModel,
    ThetaError,
    check_general_closure,
    check_theta_closed,
    least_family,
    parse_theta,
    theta_to_text,
    verify_least_collapse,
)
from model import FileFormatError, Structure, Team, parse_teams, team_of_definition
from syntax import Signature, free_vars, parse_fo, parse_il, symbols_of


@pytest.fixture
def split_theta(corpus_dir):
    """Some unary relation is neither empty nor full."""
    return parse_theta(corpus_dir / "theta" / "theta.theta")


def test_least_family_sizes(two_element):
    """Teams over (), (x) and, for the larger universe, (y) and (x, y)."""
    assert len(least_family(two_element, ["x"])) == 2 + 4
    assert len(least_family(two_element, ["x", "y"])) == 2 + 4 + 4 + 16


def test_least_collapse(two_element, three_element):
    """Every team of a finite structure is defined by its diagram."""
    assert verify_least_collapse(two_element, ("x", "y")) == []
    assert verify_least_collapse(three_element, ("x",)) == []


def test_explicit_family_gets_its_empty_teams(two_element):
    X = Team.of(("x",), [("0",)])
    G = GeneralModel.from_teams(two_element, [X])
    assert G.kind == FamilyKind.EXPLICIT
    assert G.teams == frozenset({X, Team.empty(("x",))})
    assert G.contains(X)
    assert not G.contains(Team.of(("x",), [("1",)]))


def test_family_validation(two_element):
    X = Team.of(("x",), [("0",)])
    with pytest.raises(ValueError):
        GeneralModel(structure=two_element, kind=FamilyKind.EXPLICIT, teams=frozenset({X}))
    with pytest.raises(ValueError):
        GeneralModel(structure=two_element, teams=frozenset({X, Team.empty(("x",))}))
    with pytest.raises(ValueError):
        GeneralModel(structure=two_element).family()


def test_implicit_family_is_least(two_element):
    G = GeneralModel(structure=two_element, kind=FamilyKind.LEAST)
    assert G.family(["x"]) == least_family(two_element, ["x"])
    assert G.satisfies(Team.of(("x",), [("0",), ("1",)]), parse_il("(dep(x) \\/ dep(x))"))


def test_full_family_is_closed(two_element):
    assert check_general_closure(GeneralModel(structure=two_element), ["x"], 3).closed


def test_least_family_as_explicit_is_closed(two_element):
    G = GeneralModel.from_teams(two_element, least_family(two_element, ["x"]))
    verdict = check_general_closure(G, ["x"], 3)
    assert verdict.closed
    assert verdict.formulas_checked > 0


def test_sparse_family_is_not_closed(corpus_dir, two_element):
    """A definable team missing from the family is reported with its formula."""
    teams = parse_teams(corpus_dir / "teams" / "family.team", two_element)
    G = GeneralModel.from_teams(two_element, teams.values())
    verdict = check_general_closure(G, ["x", "y"], 3)
    assert not verdict.closed
    assert verdict.formula is not None
    assert verdict.team.startswith("team missing over")


def test_cylindrified_team_is_reported_with_a_vacuous_quantifier(two_element):
    """The team over (x) is in the family; its extension by y is not."""
    G = GeneralModel.from_teams(two_element, least_family(two_element, ["x"]))
    verdict = check_general_closure(G, ["x", "y"], 1)
    assert not verdict.closed
    assert verdict.formula == "exists y. x = x"
    assert verdict.team.startswith("team missing over (x, y)")
    defined = team_of_definition(two_element, parse_fo(verdict.formula), {}, ("x", "y"))
    assert defined == Team.of(("x", "y"), [("0", "0"), ("0", "1"), ("1", "0"), ("1", "1")])


def test_closure_bound_must_be_positive(two_element):
    with pytest.raises(ValueError):
        check_general_closure(GeneralModel.from_teams(two_element, []), ["x"], 0)


def test_theta_file(split_theta):
    assert split_theta.name == "split"
    assert split_theta.sentences[0].relation_vars == (("R", 1),)
    assert parse_theta(theta_to_text(split_theta)) == split_theta


def test_theta_needs_two_elements(unary_structure, split_theta):
    """A relation that is neither empty nor full exists only with two elements."""
    assert check_theta_closed(GeneralModel(structure=unary_structure), split_theta).closed
    single = Structure(
        name="S", signature=unary_structure.signature, domain=("a",), relations={"P": frozenset()},
    )
    verdict = check_theta_closed(GeneralModel(structure=single), split_theta)
    assert not verdict.closed
    assert verdict.violation == 0


def test_theta_on_explicit_family(unary_structure, split_theta):
    """Relation variables range over the family's teams of the right arity."""
    full = Team.of(("x",), [("a",), ("b",), ("c",)])
    G = GeneralModel.from_teams(unary_structure, [full])
    assert not check_theta_closed(G, split_theta).closed
    G2 = GeneralModel.from_teams(unary_structure, [full, Team.of(("x",), [("a",)])])
    assert check_theta_closed(G2, split_theta).closed


def test_theta_symbols_must_be_fresh(two_element, split_theta):
    with pytest.raises(ThetaError):
        check_theta_closed(GeneralModel(structure=two_element), split_theta)


@pytest.mark.parametrize("text", [
    'theta t { exists R/2 : "exists x. R(x)" }',
    'theta t { exists R/1 : "R($p)" }',
    'theta t { exists R/1, R/1 : "exists x. R(x)" }',
])
def test_malformed_theta(text):
    with pytest.raises(FileFormatError):
        parse_theta(text)


POINTED_THETA = 'theta t {\n  exists R/1 : "(R(c) & exists x. not R(x))"\n}'


@pytest.fixture
def pointed_structure():
    """Two elements with the constant c naming a."""
    return Structure(
        name="C",
        signature=Signature(relations={"P": 1}, constants=frozenset({"c"})),
        domain=("a", "b"),
        relations={"P": frozenset({("a",)})},
        constants={"c": "a"},
    )


def test_theta_names_left_free_are_constants():
    body = parse_theta(POINTED_THETA).sentences[0].body
    assert not free_vars(body).team
    assert symbols_of(body).constants == frozenset({"c"})


def test_theta_read_against_a_signature(pointed_structure):
    theta = parse_theta(POINTED_THETA, pointed_structure.signature)
    assert theta.sentences[0].body == parse_theta(POINTED_THETA).sentences[0].body
    with pytest.raises(FileFormatError):
        parse_theta('theta t { exists R/1 : "R(d)" }', pointed_structure.signature)


def test_theta_with_a_constant_is_checked(pointed_structure):
    theta = parse_theta(POINTED_THETA, pointed_structure.signature)
    assert check_theta_closed(GeneralModel(structure=pointed_structure), theta).closed
    everything = Team.of(("x",), [("a",), ("b",)])
    assert not check_theta_closed(GeneralModel.from_teams(pointed_structure, [everything]), theta).closed
    pointed = GeneralModel.from_teams(pointed_structure, [everything, Team.of(("x",), [("a",)])])
    assert check_theta_closed(pointed, theta).closed
