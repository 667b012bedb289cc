"""Seeded random structures, teams and formulas, plus a fixed exhaustive formula sample."""

import itertools
import random
from typing import Iterable, List, Optional, Sequence, Tuple

from model import Structure, Team, element_names
from syntax import (
    And,
    Conj,
    Dep,
    Equal,
    Exists,
    FoFormula,
    Forall,
    IlFormula,
    Implies,
    Indep,
    Literal,
    Not,
    Or,
    ParamVar,
    RelAtom,
    Signature,
    TeamExists,
    TeamForall,
    TeamVar,
    TensorOr,
    Term,
)

SIGNATURE = Signature(relations={"P": 1, "R": 2})
VARIABLES = ("x", "y", "z")


def random_structure(
    rng: random.Random,
    sig: Signature = SIGNATURE,
    size: Optional[int] = None,
    max_size: int = 3,
    name: str = "M",
) -> Structure:
    """Relations only; each tuple is in its relation with probability one half."""
    size = size or rng.randint(1, max_size)
    domain = element_names(size)
    relations = {
        rel: frozenset(t for t in itertools.product(domain, repeat=arity) if rng.random() < 0.5)
        for rel, arity in sig.relations.items()
    }
    return Structure(name=name, signature=Signature(relations=dict(sig.relations)), domain=domain, relations=relations)


def random_team(
    rng: random.Random,
    M: Structure,
    variables: Sequence[str],
    max_rows: int = 4,
) -> Team:
    universe = list(itertools.product(M.domain, repeat=len(variables)))
    k = rng.randint(0, min(max_rows, len(universe)))
    return Team.of(variables, rng.sample(universe, k))


def random_family(rng: random.Random, M: Structure, variables: Sequence[str], count: int) -> List[Team]:
    """``count`` random teams over random subsets of ``variables``, with the empty teams they need."""
    teams = set()
    for _ in range(count):
        chosen = [v for v in variables if rng.random() < 0.7] or [variables[0]]
        teams.add(random_team(rng, M, chosen, max_rows=len(M.domain) ** len(chosen)))
    teams.update(Team.empty(X.variables) for X in list(teams))
    return sorted(teams, key=lambda T: (T.variables, sorted(T.rows)))


def _var(rng: random.Random, variables: Sequence[str]) -> TeamVar:
    return TeamVar(rng.choice(list(variables)))


def random_atom(rng: random.Random, variables: Sequence[str], sig: Signature = SIGNATURE):
    if rng.random() < 0.3:
        return Equal(_var(rng, variables), _var(rng, variables))
    rel = rng.choice(sorted(sig.relations))
    return RelAtom(rel, tuple(_var(rng, variables) for _ in range(sig.relations[rel])))


def random_fo_il(rng: random.Random, variables: Sequence[str], depth: int, sig: Signature = SIGNATURE) -> IlFormula:
    """A formula without dependency atoms, the first order fragment of independence logic."""
    if depth <= 0 or rng.random() < 0.3:
        return Literal(rng.random() < 0.6, random_atom(rng, variables, sig))
    choice = rng.randrange(4)
    if choice == 0:
        return TensorOr(random_fo_il(rng, variables, depth - 1, sig), random_fo_il(rng, variables, depth - 1, sig))
    if choice == 1:
        return Conj(random_fo_il(rng, variables, depth - 1, sig), random_fo_il(rng, variables, depth - 1, sig))
    var = rng.choice(VARIABLES)
    body = random_fo_il(rng, sorted(set(variables) | {var}), depth - 1, sig)
    return TeamExists(var, body) if choice == 2 else TeamForall(var, body)


def random_il(rng: random.Random, variables: Sequence[str], depth: int, sig: Signature = SIGNATURE) -> IlFormula:
    if depth <= 0 or rng.random() < 0.3:
        if rng.random() < 0.35:
            return random_dependency_atom(rng, variables)
        return Literal(rng.random() < 0.6, random_atom(rng, variables, sig))
    choice = rng.randrange(4)
    if choice == 0:
        return TensorOr(random_il(rng, variables, depth - 1, sig), random_il(rng, variables, depth - 1, sig))
    if choice == 1:
        return Conj(random_il(rng, variables, depth - 1, sig), random_il(rng, variables, depth - 1, sig))
    var = rng.choice(VARIABLES)
    body = random_il(rng, sorted(set(variables) | {var}), depth - 1, sig)
    return TeamExists(var, body) if choice == 2 else TeamForall(var, body)


def random_tuple(rng: random.Random, variables: Sequence[str], max_len: int = 2) -> Tuple[Term, ...]:
    return tuple(_var(rng, variables) for _ in range(rng.randint(0, max_len)))


def random_dependency_atom(rng: random.Random, variables: Sequence[str]) -> IlFormula:
    if rng.random() < 0.5:
        return Dep(random_tuple(rng, variables) + (_var(rng, variables),))
    return Indep(
        random_tuple(rng, variables),
        random_tuple(rng, variables, 1) or (_var(rng, variables),),
        random_tuple(rng, variables, 1) or (_var(rng, variables),),
    )


def random_fo(
    rng: random.Random,
    variables: Sequence[str],
    depth: int,
    sig: Signature = SIGNATURE,
    params: Sequence[str] = (),
) -> FoFormula:
    """A first order formula; ``params`` may stand in for variables at the leaves."""
    if depth <= 0 or rng.random() < 0.3:
        atom = random_atom(rng, variables, sig)
        if params and isinstance(atom, Equal) and rng.random() < 0.5:
            atom = Equal(atom.left, ParamVar(rng.choice(list(params))))
        return atom if rng.random() < 0.7 else Not(atom)
    choice = rng.randrange(5)
    if choice < 3:
        left = random_fo(rng, variables, depth - 1, sig, params)
        right = random_fo(rng, variables, depth - 1, sig, params)
        return (And, Or, Implies)[choice](left, right)
    var = rng.choice(VARIABLES)
    body = random_fo(rng, sorted(set(variables) | {var}), depth - 1, sig, params)
    return Exists(var, body) if choice == 3 else Forall(var, body)


def atom_pool(variables: Sequence[str] = ("x", "y")) -> List[IlFormula]:
    """Literals and dependency atoms over ``variables`` and the unary ``P``."""
    vs = [TeamVar(v) for v in variables]
    pool: List[IlFormula] = []
    for v in vs:
        pool.append(Literal(True, RelAtom("P", (v,))))
        pool.append(Literal(False, RelAtom("P", (v,))))
    for a, b in itertools.combinations(vs, 2):
        pool.append(Literal(True, Equal(a, b)))
        pool.append(Literal(False, Equal(a, b)))
        pool.append(Indep((), (a,), (b,)))
        pool.append(Dep((a, b)))
        pool.append(Dep((b, a)))
    for v in vs:
        pool.append(Dep((v,)))
    return pool


def exhaustive_pool() -> List[IlFormula]:
    """A literal, a negated equality and one atom of each dependency kind, over ``x`` and ``y``."""
    x, y = TeamVar("x"), TeamVar("y")
    return [
        Literal(True, RelAtom("P", (x,))),
        Literal(False, Equal(x, y)),
        Indep((), (x,), (y,)),
        Dep((y, x)),
    ]


def first_order_pool() -> List[IlFormula]:
    x, y = TeamVar("x"), TeamVar("y")
    return [Literal(True, RelAtom("P", (x,))), Literal(False, Equal(x, y))]


def grammar_sample(
    variables: Sequence[str] = ("x", "y"),
    max_size: int = 3,
    pool: Optional[Sequence[IlFormula]] = None,
    quantified: Optional[Sequence[str]] = None,
) -> List[IlFormula]:
    """Every formula of at most ``max_size`` nodes over ``pool``.

    The pool defaults to ``atom_pool(variables)`` and quantifiers to
    ``variables``, so the sample stays inside the variable universe.
    """
    by_size = {1: list(pool) if pool is not None else atom_pool(variables)}
    binders = list(quantified) if quantified is not None else list(variables)
    for size in range(2, max_size + 1):
        level: List[IlFormula] = []
        for body in by_size[size - 1]:
            for v in binders:
                level.append(TeamExists(v, body))
                level.append(TeamForall(v, body))
        for left_size in range(1, size - 1):
            for left in by_size[left_size]:
                for right in by_size[size - 1 - left_size]:
                    level.append(Conj(left, right))
                    level.append(TensorOr(left, right))
        by_size[size] = level
    return [phi for size in sorted(by_size) for phi in by_size[size]]


def all_domains(variables: Iterable[str]) -> List[Tuple[str, ...]]:
    vs = sorted(set(variables))
    return [c for k in range(len(vs) + 1) for c in itertools.combinations(vs, k)]
