"""Invariant self-test suite for the independence logic workbench."""

from .generators import exhaustive_pool, first_order_pool, grammar_sample, random_il, random_structure, random_team
from .suite import (
    InvariantKind,
    InvariantResult,
    SelfTestSuite,
    SelfTestThresholds,
    close_family,
    independence_oracle,
    mutate_step,
)

__all__ = [
    "exhaustive_pool",
    "first_order_pool",
    "grammar_sample",
    "random_il",
    "random_structure",
    "random_team",
    "InvariantKind",
    "InvariantResult",
    "SelfTestSuite",
    "SelfTestThresholds",
    "close_family",
    "independence_oracle",
    "mutate_step",
]
