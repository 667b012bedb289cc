"""Tests for the first order entailment oracle."""

import pytest
from pydantic import ValidationError

from model import eval_sentence
from prover import (
    Budget,
    ProverVerdict,
    VerdictKind,
    clausify,
    equality_axioms,
    find_countermodel,
    nnf,
    prove_entailment,
    subsumes,
    unify,
)
from syntax import parse_fo

A = ("c:a",)


def _fo(*texts):
    return [parse_fo(t) for t in texts]


def test_modus_ponens_is_proved():
    verdict = prove_entailment(_fo("forall x. (P(x) -> Q(x))", "P($a)"), _fo("Q($a)"))
    assert verdict.is_proved
    assert verdict.steps >= 0


def test_goals_are_refuted_one_at_a_time():
    """A goal repeated from the premises costs nothing; the rest is a tautology."""
    functional = (
        "forall x_1. forall x_2. (((P(x_1) & not Q(x_1)) & (P(x_2) & not Q(x_2)))"
        " -> exists x_3. (((P(x_3) & not Q(x_3)) & x_3 = x_1) & x_3 = x_2))"
    )
    partition = "forall x. (P(x) <-> ((P(x) & Q(x)) | (P(x) & not Q(x))))"
    verdict = prove_entailment(_fo(functional), _fo(functional, partition), Budget(ms=2000))
    assert verdict.is_proved


def test_premise_goal_is_proved_without_search():
    verdict = prove_entailment(_fo("exists x. R(x, x)"), _fo("exists x. R(x, x)"))
    assert verdict.is_proved
    assert verdict.steps == 0


def test_one_open_goal_leaves_the_conjunction_refuted():
    verdict = prove_entailment(_fo("P($a)"), _fo("P($a)", "Q($a)"), Budget(cm_size=1))
    assert verdict.is_refuted


def test_equality_needs_its_axioms():
    """Substituting equals takes the congruence clauses."""
    assert prove_entailment(_fo("$a = $b", "P($a)"), _fo("P($b)")).is_proved


def test_free_team_variables_are_universal():
    assert prove_entailment(_fo("P(x)"), _fo("P(x)")).is_proved


def test_invalid_entailment_has_a_countermodel():
    premises, goals = _fo("exists x. P(x)"), _fo("forall x. P(x)")
    verdict = prove_entailment(premises, goals)
    assert verdict.is_refuted
    M = verdict.countermodel
    assert M.size == 2
    assert eval_sentence(M, verdict.assignment, premises[0])
    assert not eval_sentence(M, verdict.assignment, goals[0])


def test_countermodel_assigns_parameters():
    verdict = prove_entailment(_fo("P($a)"), _fo("P($b)"))
    assert verdict.is_refuted
    assert set(verdict.assignment) == {"a", "b"}
    assert verdict.assignment["a"] != verdict.assignment["b"]


def test_empty_budget_is_unknown():
    verdict = prove_entailment(_fo("P($a)"), _fo("P($a)"), Budget(depth=0, cm_size=0))
    assert verdict.kind == VerdictKind.UNKNOWN
    assert "depth budget is zero" in verdict.reason


def test_valid_entailment_is_never_refuted():
    """Without resolution the countermodel search finds nothing and gives up."""
    verdict = prove_entailment(_fo("P($a)"), _fo("exists x. P(x)"), Budget(depth=0, cm_size=2))
    assert verdict.kind == VerdictKind.UNKNOWN
    assert "no countermodel up to size 2" in verdict.reason


def test_only_refuted_verdicts_carry_countermodels():
    with pytest.raises(ValidationError):
        ProverVerdict(kind=VerdictKind.REFUTED)
    with pytest.raises(ValidationError):
        Budget(depth=-1)


def test_countermodel_search_bounds():
    both = _fo("exists x. P(x)", "exists x. not P(x)")
    assert find_countermodel(both, 1) is None
    M, h = find_countermodel(both, 2)
    assert M.size == 2
    assert h == {}
    with pytest.raises(ValueError):
        find_countermodel(both, 0)


def test_negation_normal_form():
    phi = parse_fo("not (P(x) & forall y. R(x, y))")
    assert nnf(phi) == parse_fo("not P(x) | exists y. not R(x, y)")
    assert nnf(parse_fo("P(x) -> Q(x)")) == parse_fo("not P(x) | Q(x)")


def test_clausify_negates_the_goal():
    clauses = clausify(_fo("P($a)"), _fo("P($a)"))
    assert set(clauses) == {
        frozenset({(True, "P", ("$a",))}),
        frozenset({(False, "P", ("$a",))}),
    }


def test_unify():
    assert unify("?0", A, {}) == {"?0": A}
    assert unify(("f:g", "?0"), ("f:g", A), {}) == {"?0": A}
    assert unify("?0", ("f:g", "?0"), {}) is None
    assert unify(A, ("c:b",), {}) is None


def test_subsumption():
    general = frozenset({(True, "P", "?0")})
    specific = frozenset({(True, "P", A), (True, "Q", A)})
    assert subsumes(general, specific)
    assert not subsumes(specific, general)
    assert not subsumes(frozenset({(True, "R", "?0", "?0")}), frozenset({(True, "R", A, ("c:b",))}))


def test_equality_axioms_cover_used_symbols():
    """Reflexivity, symmetry and transitivity plus one congruence clause per argument."""
    clauses = clausify(_fo("R($a, f($a))"), _fo("P($a)"))
    axioms = equality_axioms(clauses)
    assert len(axioms) == 3 + 1 + 2 + 1
    assert frozenset({(True, "=", "?0", "?0")}) in axioms
