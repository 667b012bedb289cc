"""Tests for entailment semantics and witness trees."""

import pytest

from entailment import (
    WitnessNode,
    WitnessShapeError,
    check_witness,
    eval_entailment,
    eval_entailment_witnessed,
    parse_witness,
    witness_to_text,
)
from model import FileFormatError, TeamDomainError, team_of_definition
from semantics import eval_full
from syntax import parse_fo, parse_il

LEM = "(P(x) \\/ ~P(x))"


def _lem_witness(first: str, second: str) -> WitnessNode:
    return WitnessNode(
        "ES-or",
        (("w1", first), ("w2", second)),
        (parse_fo("x = $w1"), parse_fo("x = $w2")),
        (WitnessNode("ES-lit"), WitnessNode("ES-lit")),
    )


@pytest.mark.parametrize("gamma,h,phi,expected", [
    ("x = $p", {"p": "0"}, "dep(x)", True),
    ("R(x, y)", {}, "dep(x, y)", True),
    ("R(x, y)", {}, "dep(y, x)", False),
    ("x = x", {}, "dep(x)", False),
    ("x = x", {}, "(dep(x) \\/ dep(x))", True),
    ("P(x)", {}, "exists y. (R(x, y) /\\ dep(y))", True),
    ("false", {}, "x != x", True),
])
def test_entailment_cases(two_element, gamma, h, phi, expected):
    assert eval_entailment(two_element, parse_fo(gamma), h, parse_il(phi)) is expected


@pytest.mark.parametrize("gamma,phi", [
    ("R(x, y)", "indep( ; x ; y)"),
    ("x = $p | P(y)", "(dep(x) \\/ P(y))"),
    ("not R(x, y)", "forall z. indep(x ; y ; z)"),
])
def test_entailment_agrees_with_team_semantics(two_element, gamma, phi):
    g, p = parse_fo(gamma), parse_il(phi)
    h = {"p": "1"}
    X = team_of_definition(two_element, g, h, ["x", "y"])
    assert eval_entailment(two_element, g, h, p) == eval_full(two_element, X, p)


def test_witness_tree_is_checked(two_element):
    gamma, phi = parse_fo("x = x"), parse_il(LEM)
    witness = eval_entailment_witnessed(two_element, gamma, {}, phi)
    assert witness is not None
    assert witness.rule == "ES-or"
    assert check_witness(two_element, gamma, {}, phi, witness)


def test_no_witness_when_unsatisfied(two_element):
    assert eval_entailment_witnessed(two_element, parse_fo("x = x"), {}, parse_il("dep(x)")) is None


def test_hand_written_witnesses(two_element):
    """The split must put the element in P on the left."""
    gamma, phi = parse_fo("x = x"), parse_il(LEM)
    assert check_witness(two_element, gamma, {}, phi, _lem_witness("0", "1"))
    assert not check_witness(two_element, gamma, {}, phi, _lem_witness("1", "0"))


def test_witness_must_follow_formula_shape(two_element):
    with pytest.raises(WitnessShapeError):
        check_witness(two_element, parse_fo("x = x"), {}, parse_il(LEM), WitnessNode("ES-lit"))
    with pytest.raises(WitnessShapeError):
        WitnessNode("ES-or")


def test_witness_text_form(two_element):
    text = 'ES-or h\'={$w1=0, $w2=1} gamma1="x = $w1" gamma2="x = $w2"\n  ES-lit\n  ES-lit'
    assert witness_to_text(_lem_witness("0", "1")) == text
    assert parse_witness(text) == _lem_witness("0", "1")


def test_generated_witness_survives_text(two_element):
    gamma, phi = parse_fo("P(x)"), parse_il("exists y. (R(x, y) /\\ dep(y))")
    witness = eval_entailment_witnessed(two_element, gamma, {}, phi)
    again = parse_witness(witness_to_text(witness))
    assert again == witness
    assert check_witness(two_element, gamma, {}, phi, again)


def test_malformed_witness_text():
    with pytest.raises(FileFormatError):
        parse_witness("ES-and\n   ES-lit\n  ES-lit")
    with pytest.raises(FileFormatError):
        parse_witness("ES-lit\nES-lit")
    with pytest.raises(FileFormatError):
        parse_witness("")


def test_witness_parameters_avoid_the_assignment(two_element):
    gamma, phi = parse_fo("x = $w1"), parse_il("exists y. dep(y)")
    witness = eval_entailment_witnessed(two_element, gamma, {"w1": "0"}, phi)
    assert witness.bindings[0][0] == "w2"
    assert check_witness(two_element, gamma, {"w1": "0"}, phi, witness)


def test_formula_variables_must_fit_the_domain(two_element):
    with pytest.raises(TeamDomainError):
        eval_entailment(two_element, parse_fo("P(x)"), {}, parse_il("P(y)"), var_domain=["x"])
