"""Tests for parsing, printing and transforming formulas."""

import pytest

from syntax import (
    ArityError,
    BoundParameterError,
    CaptureError,
    Const,
    Dep,
    EmptyDependenceError,
    FormulaError,
    Indep,
    NegationError,
    NonInjectiveRenamingError,
    ParameterInFormulaError,
    Signature,
    TeamVar,
    UndeclaredSymbolError,
    desugar_dep,
    fo_of_il,
    forall_prefix,
    free_vars,
    fresh_name,
    parse_fo,
    parse_il,
    parse_term,
    rename_team_vars,
    substitute_param,
    to_text,
)

x, y, z = TeamVar("x"), TeamVar("y"), TeamVar("z")


def test_parse_independence_atom():
    """The three tuples of an independence atom are split at semicolons."""
    assert parse_il("indep(x ; y ; z)") == Indep((x,), (y,), (z,))
    assert parse_il("indep(x, y ; z ; x)") == Indep((x, y), (z,), (x,))


def test_empty_first_tuple():
    """Pure independence has nothing on the left of the first semicolon."""
    atom = parse_il("indep( ; y ; x)")
    assert atom.first == ()
    assert atom.second == (y,)


def test_dep_desugars_to_independence():
    """The last term of a dependence atom is its target."""
    assert parse_il("dep(x, y)") == Dep((x, y))
    assert desugar_dep(parse_il("dep(x, y)")) == Indep((x,), (y,), (y,))
    assert desugar_dep(parse_il("dep(x)")) == Indep((), (x,), (x,))


def test_empty_dependence_atom_rejected():
    with pytest.raises(EmptyDependenceError):
        desugar_dep(parse_il("dep()"))


def test_parameters_not_allowed_in_independence_logic():
    with pytest.raises(ParameterInFormulaError):
        parse_il("P($p)")


def test_negation_only_on_atoms():
    """Independence logic is in negation normal form."""
    with pytest.raises(NegationError):
        parse_il("~(P(x) \\/ P(y))")
    with pytest.raises(NegationError):
        parse_il("not P(x)")


def test_parameters_cannot_be_bound():
    with pytest.raises(BoundParameterError):
        parse_fo("exists $p. P($p)")


def test_signature_checks():
    """Declared symbols are enforced; undeclared arities must agree."""
    with pytest.raises(UndeclaredSymbolError):
        parse_fo("Q(x)", Signature(relations={"P": 1}))
    with pytest.raises(ArityError):
        parse_fo("P(x) & P(x, y)")


def test_names_starting_with_digit_are_constants():
    assert parse_term("0") == Const("0")
    assert parse_term("x") == x


@pytest.mark.parametrize("text", [
    "forall x. (P(x) -> x = $p)",
    "((exists y. P(x)) & exists y. y = x)",
    "not R(x, y)",
    "(P(x) <-> (Q(x) | not x = y))",
])
def test_first_order_printing_is_canonical(text):
    """Printing a parsed formula gives the text back."""
    assert to_text(parse_fo(text)) == text


@pytest.mark.parametrize("text", [
    "indep(x ; y ; z)",
    "indep( ; y ; x)",
    "(x != y \\/ ~P(x))",
    "exists y. (dep(x, y) /\\ P(y))",
    "forall x. (indep(x ; y ; y) \\/ x = y)",
])
def test_independence_printing_is_canonical(text):
    assert to_text(parse_il(text)) == text


def test_open_quantifier_on_the_left_is_parenthesized():
    phi = parse_fo("(exists y. P(y)) & P(x)")
    assert to_text(phi) == "((exists y. P(y)) & P(x))"
    assert parse_fo(to_text(phi)) == phi


def test_free_variables():
    """Quantifier scope extends to the right."""
    free = free_vars(parse_fo("exists y. R(x, y) & y = $p"))
    assert free.team == frozenset({"x"})
    assert free.params == frozenset({"p"})


def test_renaming_checks_capture_and_injectivity():
    with pytest.raises(CaptureError):
        rename_team_vars(parse_fo("exists y. R(x, y)"), {"x": "y"})
    with pytest.raises(NonInjectiveRenamingError):
        rename_team_vars(parse_fo("R(x, y)"), {"x": "y"})
    assert rename_team_vars(parse_fo("R(x, y)"), {"x": "y", "y": "x"}) == parse_fo("R(y, x)")


def test_substitute_param():
    assert substitute_param(parse_fo("P($p) & $p = x"), "p", z) == parse_fo("P(z) & z = x")


def test_forall_prefix_is_sorted():
    assert to_text(forall_prefix(["y", "x"], parse_fo("R(x, y)"))) == "forall x. forall y. R(x, y)"


def test_fresh_name_appends_primes():
    assert fresh_name("x", {"x", "x'"}) == "x''"
    assert fresh_name("y", {"x"}) == "y"


def test_first_order_reading():
    assert fo_of_il(parse_il("(P(x) \\/ x != y)")) == parse_fo("P(x) | x != y")
    with pytest.raises(FormulaError):
        fo_of_il(parse_il("indep(x ; y ; z)"))


def test_signature_merge_rejects_arity_clash():
    with pytest.raises(ArityError):
        Signature(relations={"P": 1}).merge(Signature(relations={"P": 2}))
