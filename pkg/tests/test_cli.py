"""Tests for the command line interface."""

import pytest

from cli import EXIT_ERROR, EXIT_NEGATIVE, EXIT_OPEN, EXIT_POSITIVE, main
from model import structure_to_text

LEM = "(P(x) \\/ ~P(x))"


@pytest.fixture
def model_file(tmp_path, two_element):
    path = tmp_path / "m2.struct"
    path.write_text(structure_to_text(two_element))
    return str(path)


@pytest.fixture
def run(capsys, fast_settings):
    """Run the CLI and return its exit code and printed lines."""

    def invoke(*argv):
        code = main([str(a) for a in argv], fast_settings)
        return code, capsys.readouterr().out.splitlines()

    return invoke


def test_parse_prints_canonical_text(run):
    code, lines = run("parse", "--phi", "indep(x;y;z)", "--format", "machine")
    assert code == EXIT_POSITIVE
    assert lines == ["command=parse", "formula=indep(x ; y ; z)", "verdict=ok"]


def test_parse_error_exit_code(run):
    code, lines = run("parse", "--phi", "~(P(x) \\/ P(x))", "--format", "machine")
    assert code == EXIT_ERROR
    assert any(line.startswith("error=") for line in lines)


def test_parse_proof_file(run, corpus_dir):
    code, lines = run("parse", "--file", corpus_dir / "proofs" / "fo_lit.proof", "--kind", "proof")
    assert code == EXIT_POSITIVE
    assert lines[0] == "proof fo_lit {"


def test_unknown_command(run):
    code, _ = run("nope")
    assert code == EXIT_ERROR


def test_eval_team(run, model_file, corpus_dir):
    teams = corpus_dir / "teams" / "xy.team"
    code, lines = run("eval-team", "--model", model_file, "--team", teams, "--name", "product", "--phi", "indep( ; x ; y)")
    assert code == EXIT_POSITIVE
    assert lines == ["satisfied: true"]
    code, _ = run("eval-team", "--model", model_file, "--team", teams, "--name", "diagonal", "--phi", "indep( ; x ; y)")
    assert code == EXIT_NEGATIVE


def test_eval_team_needs_a_name_for_several_teams(run, model_file, corpus_dir):
    code, lines = run("eval-team", "--model", model_file, "--team", corpus_dir / "teams" / "xy.team", "--phi", "x = x")
    assert code == EXIT_ERROR
    assert "--name" in lines[-1]


def test_eval_gts_with_closure_check(run, model_file, corpus_dir):
    code, lines = run(
        "eval-gts", "--model", model_file, "--family", corpus_dir / "teams" / "family.team",
        "--name", "X", "--phi", "exists y. y != x", "--check-closure", "--bound", "3", "--format", "machine",
    )
    assert code == EXIT_NEGATIVE
    assert "closed=false" in lines
    assert "satisfied=false" in lines


def test_entailment_witness_written_and_checked(run, model_file, tmp_path):
    witness = tmp_path / "lem.witness"
    code, lines = run("eval-ent", "--model", model_file, "--gamma", "x = x", "--phi", LEM, "--witness-out", witness)
    assert code == EXIT_POSITIVE
    assert lines[0] == "satisfied: true"
    assert witness.read_text().startswith("ES-or")
    code, lines = run("witness", "--model", model_file, "--gamma", "x = x", "--phi", LEM, "--witness", witness)
    assert code == EXIT_POSITIVE
    assert lines == ["verdict: accepted"]


def test_entailment_with_parameters(run, model_file):
    code, _ = run("eval-ent", "--model", model_file, "--gamma", "x = $p", "--param", "$p=0", "--phi", "dep(x)")
    assert code == EXIT_POSITIVE
    code, _ = run("eval-ent", "--model", model_file, "--gamma", "x = x", "--phi", "dep(x)")
    assert code == EXIT_NEGATIVE
    code, _ = run("eval-ent", "--model", model_file, "--gamma", "x = $p", "--param", "p", "--phi", "dep(x)")
    assert code == EXIT_ERROR


def test_check_proof_machine_output(run, corpus_dir):
    code, lines = run("check-proof", "--proof", corpus_dir / "proofs" / "fo_lit.proof", "--format", "machine")
    assert code == EXIT_POSITIVE
    assert lines == ["command=check-proof", "proof=fo_lit", "step.1=ok", "verdict=verified"]


def test_check_proof_with_theory(run, corpus_dir):
    proof = corpus_dir / "proofs" / "theta.proof"
    code, _ = run("check-proof", "--proof", proof)
    assert code == EXIT_NEGATIVE
    code, _ = run("check-proof", "--proof", proof, "--theta", corpus_dir / "theta" / "theta.theta")
    assert code in (EXIT_POSITIVE, EXIT_OPEN)


def test_derive_dependence_proof(run):
    code, lines = run("derive", "--gamma", "R(x, y)", "--phi", "dep(x, y)", "--format", "machine")
    assert code == EXIT_POSITIVE
    assert "length=1" in lines
    assert "verdict=derived" in lines


def test_validate_sequents(run, corpus_dir):
    code, lines = run("validate-seq", "--seq", corpus_dir / "sequents" / "bad.seq", "--format", "machine")
    assert code == EXIT_NEGATIVE
    assert "valid=false" in lines
    assert any(line.startswith("counterexample=model ") for line in lines)
    code, lines = run(
        "validate-seq", "--seq", corpus_dir / "sequents" / "examples.seq", "--name", "param",
        "--max-size", "2", "--format", "machine",
    )
    assert code == EXIT_POSITIVE
    assert "max_size=2" in lines


def test_theta_check(run, tmp_path, unary_structure, corpus_dir):
    path = tmp_path / "u.struct"
    path.write_text(structure_to_text(unary_structure))
    code, lines = run("theta-check", "--model", path, "--theta", corpus_dir / "theta" / "theta.theta")
    assert code == EXIT_POSITIVE
    assert lines == ["closed: true"]
