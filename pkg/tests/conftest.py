"""Pytest configuration and fixtures."""

from pathlib import Path

import pytest

from config import Settings
from model import Structure, Team, parse_structures
from syntax import Signature

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


@pytest.fixture
def corpus_dir():
    """Bundled example files."""
    return CORPUS


@pytest.fixture
def two_element():
    """``M2`` of the bundled structures: P = {0}, R = {(0, 1), (1, 1)}."""
    return parse_structures(CORPUS / "structures" / "small.struct")[0]


@pytest.fixture
def three_element():
    """``M3`` of the bundled structures, with a function and a constant."""
    return parse_structures(CORPUS / "structures" / "small.struct")[1]


@pytest.fixture
def unary_structure():
    """Three elements with P = {a, b}."""
    return Structure(
        name="U",
        signature=Signature(relations={"P": 1}),
        domain=("a", "b", "c"),
        relations={"P": frozenset({("a",), ("b",)})},
    )


@pytest.fixture
def product_team():
    """Every pair over {0, 1}."""
    return Team.of(("x", "y"), [("0", "0"), ("0", "1"), ("1", "0"), ("1", "1")])


@pytest.fixture
def diagonal_team():
    return Team.of(("x", "y"), [("0", "0"), ("1", "1")])


@pytest.fixture
def fast_settings():
    """Small sample counts so the self-test suite stays quick."""
    return Settings(
        _env_file=None,
        selftest_samples=4,
        selftest_formula_size=2,
        selftest_team_vars=2,
        max_size=2,
        prover_ms=2000,
        corpus_dir=CORPUS,
    )
