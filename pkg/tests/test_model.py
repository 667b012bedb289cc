"""Tests for structures, teams, file formats and first order evaluation."""

import pytest

from model import (
    FileFormatError,
    Team,
    TeamDomainError,
    UnboundVariableError,
    canonical_team_definition,
    count_structures,
    count_x_variations,
    enumerate_structures,
    enumerate_x_variations,
    eval_fo,
    eval_sentence,
    eval_term,
    full_team,
    is_x_variation,
    parse_structure,
    parse_structures,
    parse_teams,
    structure_to_text,
    team_extend_universal,
    team_of_definition,
    team_restrict,
    team_to_text,
)
from syntax import Signature, parse_fo, parse_term


def test_bundled_structures(two_element, three_element):
    """Both bundled structures load with their tables."""
    assert two_element.domain == ("0", "1")
    assert two_element.holds("R", ("0", "1"))
    assert not two_element.holds("P", ("1",))
    assert three_element.apply("f", ("c",)) == "a"
    assert three_element.constant("c0") == "a"


def test_structure_text_round_trip(three_element):
    assert parse_structure(structure_to_text(three_element)) == three_element


def test_malformed_structure_reports_line():
    text = "model M {\n  domain = {0, 1}\n  rel P/1 = {(0, 1)}\n}"
    with pytest.raises(FileFormatError) as excinfo:
        parse_structures(text)
    assert excinfo.value.line == 3


def test_partial_function_rejected():
    with pytest.raises(FileFormatError):
        parse_structure("model M { domain = {0, 1} fun f/1 = {0 -> 1} }")


def test_teams_file(corpus_dir, two_element):
    teams = parse_teams(corpus_dir / "teams" / "xy.team", two_element)
    assert list(teams) == ["single", "product", "diagonal"]
    assert len(teams["product"]) == 4
    assert teams["diagonal"].variables == ("x", "y")


def test_team_outside_domain_rejected(two_element):
    with pytest.raises(FileFormatError):
        parse_teams("team X over (x) { (7) }", two_element)


def test_team_over_no_variables():
    """The team holding only the empty assignment is written with ``()``."""
    teams = parse_teams("team T over () { () }\nteam E over () { }")
    assert len(teams["T"]) == 1
    assert len(teams["E"]) == 0
    assert teams["T"] != teams["E"]


def test_team_text_round_trip(diagonal_team):
    assert parse_teams(team_to_text(diagonal_team, "D"))["D"] == diagonal_team


def test_team_columns_are_sorted():
    X = Team.of(("y", "x"), [("1", "0")])
    assert X.variables == ("x", "y")
    assert X.rows == frozenset({("0", "1")})


def test_empty_teams_differ_by_domain():
    assert Team.empty(("x",)) != Team.empty(("x", "y"))


def test_restrict_and_extend(two_element, diagonal_team):
    assert team_restrict(diagonal_team, ["x"]) == Team.of(("x",), [("0",), ("1",)])
    assert team_extend_universal(two_element, diagonal_team, "y") == full_team(two_element, ["x", "y"])
    with pytest.raises(TeamDomainError):
        team_restrict(diagonal_team, ["z"])


def test_x_variations(two_element):
    """Each row independently picks a nonempty set of values."""
    X = Team.of(("x",), [("0",), ("1",)])
    variations = list(enumerate_x_variations(two_element, X, "y"))
    assert len(variations) == count_x_variations(two_element, X, "y") == 9
    assert len(set(variations)) == 9
    assert all(is_x_variation(X, Y, "y") for Y in variations)


def test_eval_term_and_formula(three_element):
    assert eval_term(three_element, {}, {"x": "a"}, parse_term("f(f(x))")) == "c"
    assert eval_fo(three_element, {"p": "b"}, {"x": "a"}, parse_fo("R(x, $p) & P(f(x))"))
    assert eval_sentence(three_element, {}, parse_fo("exists x. f(x) = c0", three_element.signature))
    with pytest.raises(UnboundVariableError):
        eval_fo(three_element, {}, {}, parse_fo("P(x)"))


def test_team_of_definition(two_element):
    X = team_of_definition(two_element, parse_fo("R(x, y) & not x = y"), {}, ["x", "y"])
    assert X == Team.of(("x", "y"), [("0", "1")])


def test_definition_needs_its_parameters(two_element):
    with pytest.raises(UnboundVariableError):
        team_of_definition(two_element, parse_fo("x = $p"), {}, ["x"])


def test_canonical_definition_defines_the_team(two_element, diagonal_team):
    gamma, h = canonical_team_definition(diagonal_team, order=two_element.index)
    assert sorted(h) == ["q1", "q2", "q3", "q4"]
    assert team_of_definition(two_element, gamma, h, ["x", "y"]) == diagonal_team


def test_canonical_definition_of_empty_team(two_element):
    gamma, h = canonical_team_definition(Team.empty(("x",)))
    assert h == {}
    assert team_of_definition(two_element, gamma, h, ["x"]) == Team.empty(("x",))


def test_structure_enumeration_counts():
    sig = Signature(relations={"P": 1, "R": 2})
    assert count_structures(sig, 2) == 4 * 16
    assert len(list(enumerate_structures(sig, 2))) == 64
    assert len(list(enumerate_structures(sig, 2, limit=10))) == 10


def test_enumeration_includes_functions_and_constants():
    sig = Signature(functions={"f": 1}, constants=frozenset({"c"}))
    assert count_structures(sig, 2) == 4 * 2
    structures = list(enumerate_structures(sig, 2))
    assert len({(tuple(sorted(M.functions["f"].items())), M.constants["c"]) for M in structures}) == 8
