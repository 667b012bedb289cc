"""Tests for the invariant self-test suite."""

import random
from pathlib import Path

import pytest
from pydantic import ValidationError

from config import Settings
from evaluation import (
    InvariantKind,
    SelfTestSuite,
    SelfTestThresholds,
    close_family,
    exhaustive_pool,
    first_order_pool,
    grammar_sample,
    independence_oracle,
    mutate_step,
    random_il,
)
from general import GeneralModel, check_general_closure, least_family, parse_theta
from proof import Overall, check_proof, parse_proof
from syntax import TeamVar, free_vars

x, y = TeamVar("x"), TeamVar("y")

PROOFS = sorted((Path(__file__).resolve().parent.parent / "corpus" / "proofs").glob("*.proof"))


def test_independence_oracle(product_team, diagonal_team):
    assert independence_oracle(product_team, (), (x,), (y,))
    assert not independence_oracle(diagonal_team, (), (x,), (y,))
    assert independence_oracle(diagonal_team, (x,), (y,), (y,))


def test_grammar_sample_sizes():
    """Eleven atoms over x and y; each one grows four quantified formulas."""
    assert len(grammar_sample(max_size=1)) == 11
    assert len(grammar_sample(max_size=2)) == 11 + 44
    assert all(free_vars(phi).team <= {"x", "y"} for phi in grammar_sample())


def test_exhaustive_samples_cover_every_shape():
    """Counts by size: 4, 8, 48, 224, 1344 and, for the first order pool, up to 1344 at size six."""
    assert len(grammar_sample(max_size=5, pool=exhaustive_pool(), quantified=("y",))) == 1628
    assert len(grammar_sample(max_size=6, pool=first_order_pool(), quantified=("y",))) == 1718


def test_random_formulas_are_reproducible():
    first = [random_il(random.Random(3), ["x", "y"], 2) for _ in range(3)]
    again = [random_il(random.Random(3), ["x", "y"], 2) for _ in range(3)]
    assert first == again


@pytest.mark.parametrize("seed", range(20))
def test_mutated_proofs_are_rejected(corpus_dir, seed):
    """Twenty corruptions spread over the whole corpus."""
    proof_file = PROOFS[seed % len(PROOFS)]
    theory = corpus_dir / "theta" / f"{proof_file.stem}.theta"
    theta = parse_theta(theory) if theory.exists() else None
    mutated = mutate_step(parse_proof(proof_file), random.Random(seed))
    assert mutated.name.endswith("-mutated")
    assert check_proof(mutated, theta).overall == Overall.REJECTED


def test_closing_the_empty_family_gives_the_least_family(two_element):
    assert close_family(two_element, [], ["x"], 2) == least_family(two_element, ["x"])


def test_common_teams_of_closed_families_are_closed(two_element):
    universe = ["x", "y"]
    first = close_family(two_element, least_family(two_element, ["x"]), universe, 1)
    second = close_family(two_element, least_family(two_element, ["y"]), universe, 1)
    meet = GeneralModel.from_teams(two_element, first & second)
    assert check_general_closure(meet, universe, 1).closed


def test_slow_checks_get_a_longer_ceiling():
    thresholds = SelfTestThresholds()
    assert thresholds.ceiling(InvariantKind.SOUNDNESS) == thresholds.slow_max_ms
    assert thresholds.ceiling(InvariantKind.LOCALITY) == thresholds.slow_max_ms
    assert thresholds.ceiling(InvariantKind.INDEPENDENCE_ORACLE) == thresholds.max_ms


def test_default_sample_counts():
    defaults = Settings(_env_file=None)
    assert defaults.selftest_samples >= 500
    assert defaults.selftest_formula_size == 5
    assert defaults.selftest_team_vars == 3


def test_team_variable_bound_is_checked():
    with pytest.raises(ValidationError):
        Settings(_env_file=None, selftest_team_vars=4)


@pytest.mark.parametrize("kind", list(InvariantKind))
def test_invariant_holds(fast_settings, kind):
    result = SelfTestSuite(fast_settings).run(kind)
    assert result.cases > 0
    assert result.violations == 0, result.counterexample
    assert result.passed


def test_exhaustive_checks_enumerate_every_small_team(fast_settings):
    """Nine sample formulas fit the domain (x) and all twelve fit (x, y)."""
    suite = SelfTestSuite(fast_settings)
    assert len(list(suite.small_structures())) == 6
    assert suite.team_domains() == [(), ("x",), ("y",), ("x", "y")]
    assert suite.run(InvariantKind.EMPTY_TEAM).cases == 6 * (9 + 12)


def test_suite_is_deterministic(fast_settings):
    suite = SelfTestSuite(fast_settings)
    first = suite.run(InvariantKind.DEP_SUGAR)
    second = suite.run(InvariantKind.DEP_SUGAR)
    assert (first.cases, first.violations) == (second.cases, second.violations)
