"""Tests for the sequent calculus, the proof checker and sequent validation."""

from pathlib import Path

import pytest

from general import GeneralModel, Theta, parse_theta
from model import FileFormatError, Team
from proof import (
    Overall,
    ProofFormatError,
    RuleApplicationError,
    RuleTag,
    Sequent,
    SequentError,
    StepStatus,
    apply_rule,
    axiom_lit,
    check_proof,
    derive_dep,
    derive_fo,
    holds_in_general_model,
    parse_proof,
    parse_proofs,
    parse_sequents,
    proof_to_text,
    sequent_to_text,
    validate_sequent,
)
from syntax import FormulaError, TeamVar, parse_fo, parse_il

PROOFS = sorted((Path(__file__).resolve().parent.parent / "corpus" / "proofs").glob("*.proof"))


def _theta_for(corpus_dir: Path, proof_file: Path) -> Theta | None:
    candidate = corpus_dir / "theta" / f"{proof_file.stem}.theta"
    return parse_theta(candidate) if candidate.exists() else None


def _seq(ctx, gamma, phi):
    return Sequent.of([parse_fo(c) for c in ctx], parse_fo(gamma), parse_il(phi))


@pytest.fixture
def examples(corpus_dir):
    return parse_sequents(corpus_dir / "sequents" / "examples.seq")


@pytest.mark.parametrize("proof_file", PROOFS, ids=lambda p: p.stem)
def test_bundled_proofs_are_verified(corpus_dir, proof_file):
    """Default budgets discharge every PS-ent obligation of the corpus."""
    proof = parse_proof(proof_file)
    report = check_proof(proof, _theta_for(corpus_dir, proof_file))
    assert report.overall == Overall.VERIFIED, report.steps
    assert len(report.steps) == len(proof.steps)


@pytest.mark.parametrize("proof_file", PROOFS, ids=lambda p: p.stem)
def test_bundled_conclusions_are_valid(corpus_dir, proof_file):
    proof = parse_proof(proof_file)
    verdict = validate_sequent(proof.conclusion, 3, _theta_for(corpus_dir, proof_file))
    assert verdict.valid, verdict.counterexample
    assert verdict.exhaustive


def test_or_mixed_obligation_is_proved(corpus_dir):
    """A context sentence repeated in the weakened context needs no search."""
    proof = parse_proof(corpus_dir / "proofs" / "or_mixed.proof")
    report = check_proof(proof)
    assert report.steps[4].status == StepStatus.OK


def test_axiom_only_proof_is_verified(corpus_dir):
    report = check_proof(parse_proof(corpus_dir / "proofs" / "fo_lit.proof"))
    assert report.overall == Overall.VERIFIED
    assert report.first_failure() is None


def test_wrong_context_is_rejected():
    text = 'proof p { 1: PS-lit gamma="R(x)" phi="x != x" ctx=["forall x. (R(x) -> x = x)"] }'
    report = check_proof(parse_proof(text))
    assert report.overall == Overall.REJECTED
    assert "context differs" in report.first_failure().reason


def test_invalid_weakening_is_refuted(corpus_dir):
    """Dropping the context of a PS-ent step leaves an entailment with a countermodel."""
    text = (
        'proof p {\n'
        '  1: PS-lit gamma="P(x)" phi="Q(x)" ctx=["forall x. (P(x) -> Q(x))"]\n'
        '  2: PS-ent from [1] gamma="P(x)" phi="Q(x)" ctx=[]\n'
        '}'
    )
    report = check_proof(parse_proof(text))
    failure = report.first_failure()
    assert report.overall == Overall.REJECTED
    assert failure.index == 2
    assert "fails in a structure" in failure.reason


def test_premises_must_come_earlier():
    text = (
        'proof p {\n'
        '  1: PS-lit gamma="P(x)" phi="Q(x)" ctx=["forall x. (P(x) -> Q(x))"]\n'
        '  2: PS-ent from [2] gamma="P(x)" phi="Q(x)" ctx=["forall x. (P(x) -> Q(x))"]\n'
        '}'
    )
    report = check_proof(parse_proof(text))
    assert report.steps[0].status == StepStatus.OK
    assert "not an earlier step" in report.steps[1].reason


def test_axioms_take_no_premises():
    text = 'proof p { 1: PS-lit from [1] gamma="R(x)" phi="x = x" ctx=["forall x. (R(x) -> x = x)"] }'
    assert check_proof(parse_proof(text)).overall == Overall.REJECTED


def test_step_numbers_must_be_consecutive():
    text = 'proof p { 2: PS-lit gamma="R(x)" phi="x = x" ctx=["forall x. (R(x) -> x = x)"] }'
    report = check_proof(parse_proof(text))
    assert "stands at position 1" in report.first_failure().reason


def test_theta_rule_needs_the_theory(corpus_dir):
    report = check_proof(parse_proof(corpus_dir / "proofs" / "theta.proof"))
    assert report.overall == Overall.REJECTED
    assert report.first_failure().index == 7


def test_dependence_atom_is_read_as_independence(corpus_dir):
    """A step may state dep(x, y) where the rule produced indep(x ; y ; y)."""
    proof = parse_proof(corpus_dir / "proofs" / "dep.proof")
    assert proof.conclusion.phi == parse_il("dep(x, y)")
    assert proof.steps[0].sequent.phi != proof.conclusion.phi
    assert check_proof(proof).steps[1].status != StepStatus.FAILED


def test_proof_text_round_trip(corpus_dir):
    for proof_file in PROOFS:
        proof = parse_proof(proof_file)
        assert parse_proof(proof_to_text(proof)) == proof


def test_malformed_proofs():
    with pytest.raises(ProofFormatError):
        parse_proofs('proof p { 1: PS-magic gamma="x = x" phi="x = x" ctx=[] }')
    with pytest.raises(ProofFormatError):
        parse_proofs('proof p { 1: PS-lit gamma="x = x" ctx=[] }')
    with pytest.raises(ProofFormatError):
        parse_proofs('proof p { 1: PS-lit gamma="x = x" phi="P($p)" ctx=[] }')
    with pytest.raises(FileFormatError):
        parse_proofs("proof p { }")
    with pytest.raises(FileFormatError):
        parse_proof("")


def test_sequent_restrictions():
    with pytest.raises(SequentError):
        _seq(["P(x)"], "x = x", "P(x)")


def test_rule_application_errors():
    s = axiom_lit(parse_fo("P(x)"), parse_il("P(x)"))
    with pytest.raises(RuleApplicationError):
        apply_rule(RuleTag.OR, [s])
    with pytest.raises(RuleApplicationError):
        apply_rule(RuleTag.OR, [s, s])
    with pytest.raises(RuleApplicationError):
        apply_rule(RuleTag.LIT, [])
    with pytest.raises(RuleApplicationError):
        axiom_lit(parse_fo("P(x)"), parse_il("dep(x)"))


def test_and_needs_one_team_definition():
    left = axiom_lit(parse_fo("P(x)"), parse_il("P(x)"))
    right = axiom_lit(parse_fo("Q(x)"), parse_il("Q(x)"))
    with pytest.raises(RuleApplicationError):
        apply_rule(RuleTag.AND, [left, right])


def test_derived_literal_rule():
    proof = derive_fo(parse_fo("P(x)"), parse_il("Q(x)"))
    assert [step.rule for step in proof.steps] == [RuleTag.LIT]
    assert check_proof(proof).overall == Overall.VERIFIED


@pytest.mark.parametrize("phi,length", [
    ("(P(x) /\\ Q(x))", 4),
    ("(P(x) \\/ ~P(x))", 6),
    ("exists y. R(x, y)", 5),
    ("forall y. R(x, y)", 4),
])
def test_derived_first_order_rule(phi, length):
    gamma = parse_fo("x = x")
    proof = derive_fo(gamma, parse_il(phi))
    assert len(proof.steps) == length
    assert proof.conclusion.gamma == gamma
    assert proof.conclusion.phi == parse_il(phi)
    assert check_proof(proof).overall != Overall.REJECTED


def test_derived_rule_needs_first_order_formula():
    with pytest.raises(FormulaError):
        derive_fo(parse_fo("x = x"), parse_il("(P(x) /\\ dep(x))"))


def test_derived_dependence_rule(examples):
    """The conclusion is the functional dependency sequent of the bundled examples."""
    proof = derive_dep(parse_fo("R(x, y)"), (TeamVar("x"),), TeamVar("y"))
    assert [step.rule for step in proof.steps] == [RuleTag.IND, RuleTag.ENT]
    assert proof.conclusion.same_as(examples["fd"])


def test_sequent_text_round_trip(examples):
    for name, s in examples.items():
        assert parse_sequents(sequent_to_text(s, name))[name] == s


def test_bundled_sequents_are_valid(examples):
    for s in examples.values():
        assert validate_sequent(s, 2).valid


def test_invalid_sequent_has_counterexample(corpus_dir):
    bad = parse_sequents(corpus_dir / "sequents" / "bad.seq")["bad"]
    verdict = validate_sequent(bad, 2)
    assert not verdict.valid
    assert verdict.counterexample.size == 1


def test_theory_restricts_the_structures(corpus_dir):
    """Without the theory a single element refutes the sequent."""
    s = parse_sequents(corpus_dir / "sequents" / "theta_needed.seq")["two"]
    theta = parse_theta(corpus_dir / "theta" / "theta.theta")
    assert not validate_sequent(s, 2).valid
    assert validate_sequent(s, 2, theta).valid


def test_structure_limit_marks_verdict_partial(examples):
    verdict = validate_sequent(examples["fd"], 2, limit=3)
    assert verdict.valid
    assert not verdict.exhaustive
    assert validate_sequent(examples["fd"], 2).exhaustive
    with pytest.raises(ValueError):
        validate_sequent(examples["fd"], 0)


def test_sequent_in_general_models(two_element, examples):
    """A split that needs singleton teams fails when the family lacks them."""
    assert holds_in_general_model(GeneralModel(structure=two_element), examples["fd"])
    s = _seq([], "x = x", "(dep(x) \\/ dep(x))")
    assert holds_in_general_model(GeneralModel(structure=two_element), s)
    both = Team.of(("x",), [("0",), ("1",)])
    assert not holds_in_general_model(GeneralModel.from_teams(two_element, [both]), s)
