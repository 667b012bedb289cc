"""Clause normal form and the term operations resolution needs.

Terms use the usual resolution encoding: a variable is a string ``"?n"``,
every other term is a tuple ``(symbol, *args)`` and constants are 1-tuples.
A literal is ``(positive, predicate, *args)``; a clause is a frozenset of
literals and the empty clause is a contradiction.

Symbols are tagged by origin so that no two kinds can collide: ``c:`` for
constants, ``$`` for parameter variables, ``v:`` for free team variables,
``f:`` for functions and ``sk:`` for Skolem functions.
"""

import logging
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Union

from syntax import (
    BOTTOM,
    TOP,
    And,
    App,
    Bottom,
    Const,
    Equal,
    Exists,
    FoFormula,
    Forall,
    Iff,
    Implies,
    Not,
    Or,
    ParamVar,
    RelAtom,
    TeamVar,
    Term,
    Top,
    conjoin,
    free_vars,
)

logger = logging.getLogger(__name__)

CTerm = Union[str, tuple]
CLiteral = tuple
Clause = FrozenSet[CLiteral]
Substitution = Dict[str, CTerm]

EQUALITY = "="
DEFAULT_MAX_CLAUSES = 5000


class ClauseExplosion(RuntimeError):
    """Clausification would produce more clauses than allowed."""


def is_var(t: CTerm) -> bool:
    return isinstance(t, str)


def cterm_depth(t: CTerm) -> int:
    if isinstance(t, str) or len(t) == 1:
        return 0
    return 1 + max(cterm_depth(a) for a in t[1:])


def clause_depth(clause: Clause) -> int:
    return max((cterm_depth(a) for lit in clause for a in lit[2:]), default=0)


def weight(clause: Clause) -> int:
    def size(t: CTerm) -> int:
        return 1 if isinstance(t, str) else 1 + sum(size(a) for a in t[1:])

    return sum(1 + sum(size(a) for a in lit[2:]) for lit in clause)


def variables_of(t: CTerm) -> Set[str]:
    if isinstance(t, str):
        return {t}
    out: Set[str] = set()
    for a in t[1:]:
        out |= variables_of(a)
    return out


# ------------------------------------------------------------ normal forms

def nnf(phi: FoFormula, positive: bool = True) -> FoFormula:
    """Negation normal form; ``positive=False`` yields the NNF of ``not phi``."""
    match phi:
        case Top():
            return TOP if positive else BOTTOM
        case Bottom():
            return BOTTOM if positive else TOP
        case RelAtom() | Equal():
            return phi if positive else Not(phi)
        case Not(body):
            return nnf(body, not positive)
        case And(l, r):
            if positive:
                return And(nnf(l), nnf(r))
            return Or(nnf(l, False), nnf(r, False))
        case Or(l, r):
            if positive:
                return Or(nnf(l), nnf(r))
            return And(nnf(l, False), nnf(r, False))
        case Implies(l, r):
            return nnf(Or(Not(l), r), positive)
        case Iff(l, r):
            if positive:
                return And(nnf(Or(Not(l), r)), nnf(Or(l, Not(r))))
            return Or(nnf(And(l, Not(r))), nnf(And(Not(l), r)))
        case Exists(v, body):
            return Exists(v, nnf(body)) if positive else Forall(v, nnf(body, False))
        case Forall(v, body):
            return Forall(v, nnf(body)) if positive else Exists(v, nnf(body, False))
    raise TypeError(f"not a first order formula: {phi!r}")


class _Clausifier:
    """Skolemizes an NNF formula and distributes it into clauses."""

    def __init__(self, max_clauses: int):
        self.max_clauses = max_clauses
        self.next_var = 0
        self.next_skolem = 0

    def term(self, t: Term, env: Dict[str, CTerm]) -> CTerm:
        match t:
            case TeamVar(name):
                return env[name] if name in env else ("v:" + name,)
            case ParamVar(name):
                return ("$" + name,)
            case Const(name):
                return ("c:" + name,)
            case App(func, args):
                return ("f:" + func, *(self.term(a, env) for a in args))
        raise TypeError(f"not a term: {t!r}")

    def clauses(self, phi: FoFormula, env: Dict[str, CTerm]) -> List[Clause]:
        match phi:
            case Top():
                return []
            case Bottom():
                return [frozenset()]
            case RelAtom(name, args):
                return [frozenset({(True, name, *(self.term(a, env) for a in args))})]
            case Equal(l, r):
                return [frozenset({(True, EQUALITY, self.term(l, env), self.term(r, env))})]
            case Not(RelAtom(name, args)):
                return [frozenset({(False, name, *(self.term(a, env) for a in args))})]
            case Not(Equal(l, r)):
                return [frozenset({(False, EQUALITY, self.term(l, env), self.term(r, env))})]
            case And(l, r):
                out = self.clauses(l, env) + self.clauses(r, env)
                self._check(len(out))
                return out
            case Or(l, r):
                left = self.clauses(l, env)
                right = self.clauses(r, env)
                self._check(len(left) * len(right))
                return [a | b for a in left for b in right]
            case Forall(v, body):
                var = f"?{self.next_var}"
                self.next_var += 1
                return self.clauses(body, {**env, v: var})
            case Exists(v, body):
                deps: Set[str] = set()
                for name in free_vars(phi).team:
                    if name in env:
                        deps |= variables_of(env[name])
                self.next_skolem += 1
                witness = (f"sk:{self.next_skolem}", *sorted(deps))
                return self.clauses(body, {**env, v: witness})
        raise TypeError(f"formula is not in negation normal form: {phi!r}")

    def _check(self, count: int) -> None:
        if count > self.max_clauses:
            raise ClauseExplosion(f"clause form exceeds {self.max_clauses} clauses")


def simplify(clause: Clause) -> Optional[Clause]:
    """Drop false ``t != t`` literals; ``None`` for tautologies."""
    kept = set()
    for lit in clause:
        if lit[1] == EQUALITY and lit[2] == lit[3]:
            if lit[0]:
                return None
            continue
        if (not lit[0],) + lit[1:] in clause:
            return None
        kept.add(lit)
    return frozenset(kept)


def clausify(
    premises: Sequence[FoFormula],
    goals: Sequence[FoFormula],
    max_clauses: int = DEFAULT_MAX_CLAUSES,
) -> List[Clause]:
    """Clauses of ``premises`` together with the negation of ``/\\ goals``.

    Raises:
        ClauseExplosion: the clause form is larger than ``max_clauses``
    """
    worker = _Clausifier(max_clauses)
    out: List[Clause] = []
    for phi in [*premises, Not(conjoin(list(goals)))]:
        for clause in worker.clauses(nnf(phi), {}):
            simple = simplify(clause)
            if simple is not None:
                out.append(normalize(simple))
        worker._check(len(out))
    logger.debug("clausified %d premises into %d clauses", len(premises), len(out))
    return out


# ----------------------------------------------------------- substitution

def _walk(t: CTerm, sub: Substitution) -> CTerm:
    while isinstance(t, str) and t in sub:
        t = sub[t]
    return t


def _occurs(var: str, t: CTerm, sub: Substitution) -> bool:
    t = _walk(t, sub)
    if t == var:
        return True
    return isinstance(t, tuple) and any(_occurs(var, a, sub) for a in t[1:])


def unify(a: CTerm, b: CTerm, sub: Substitution) -> Optional[Substitution]:
    """Robinson unification with occurs check; ``sub`` is not modified."""
    a = _walk(a, sub)
    b = _walk(b, sub)
    if a == b:
        return sub
    if isinstance(a, str):
        return None if _occurs(a, b, sub) else {**sub, a: b}
    if isinstance(b, str):
        return None if _occurs(b, a, sub) else {**sub, b: a}
    if a[0] != b[0] or len(a) != len(b):
        return None
    for x, y in zip(a[1:], b[1:]):
        sub = unify(x, y, sub)
        if sub is None:
            return None
    return sub


def unify_args(left: CLiteral, right: CLiteral, sub: Substitution) -> Optional[Substitution]:
    if left[1] != right[1] or len(left) != len(right):
        return None
    for x, y in zip(left[2:], right[2:]):
        sub = unify(x, y, sub)
        if sub is None:
            return None
    return sub


def substitute(t: CTerm, sub: Substitution) -> CTerm:
    t = _walk(t, sub)
    if isinstance(t, str) or len(t) == 1:
        return t
    return (t[0], *(substitute(a, sub) for a in t[1:]))


def substitute_clause(clause: Iterable[CLiteral], sub: Substitution) -> Clause:
    return frozenset(lit[:2] + tuple(substitute(a, sub) for a in lit[2:]) for lit in clause)


def rename_clause(clause: Clause, suffix: str) -> Clause:
    def rename(t: CTerm) -> CTerm:
        if isinstance(t, str):
            return t + suffix
        return (t[0], *(rename(a) for a in t[1:]))

    return frozenset(lit[:2] + tuple(rename(a) for a in lit[2:]) for lit in clause)


def _shape(t: CTerm) -> str:
    if isinstance(t, str):
        return "?"
    return t[0] + "(" + ",".join(_shape(a) for a in t[1:]) + ")"


def normalize(clause: Clause) -> Clause:
    """Rename variables to ``?0, ?1, ...`` in a fixed literal order."""
    ordered = sorted(clause, key=lambda lit: (lit[0], lit[1], [_shape(a) for a in lit[2:]], repr(lit)))
    mapping: Dict[str, str] = {}

    def rename(t: CTerm) -> CTerm:
        if isinstance(t, str):
            if t not in mapping:
                mapping[t] = f"?{len(mapping)}"
            return mapping[t]
        return (t[0], *(rename(a) for a in t[1:]))

    return frozenset(lit[:2] + tuple(rename(a) for a in lit[2:]) for lit in ordered)


def _match(pattern: CTerm, target: CTerm, sub: Substitution) -> Optional[Substitution]:
    if isinstance(pattern, str):
        if pattern in sub:
            return sub if sub[pattern] == target else None
        return {**sub, pattern: target}
    if isinstance(target, str) or pattern[0] != target[0] or len(pattern) != len(target):
        return None
    for x, y in zip(pattern[1:], target[1:]):
        sub = _match(x, y, sub)
        if sub is None:
            return None
    return sub


def subsumes(general: Clause, specific: Clause) -> bool:
    """Whether some instance of ``general`` is a subset of ``specific``."""
    if len(general) > len(specific):
        return False
    lits = sorted(general, key=weight_of_literal, reverse=True)

    def extend(i: int, sub: Substitution) -> bool:
        if i == len(lits):
            return True
        lit = lits[i]
        for other in specific:
            if other[0] != lit[0] or other[1] != lit[1] or len(other) != len(lit):
                continue
            s: Optional[Substitution] = sub
            for x, y in zip(lit[2:], other[2:]):
                s = _match(x, y, s)
                if s is None:
                    break
            if s is not None and extend(i + 1, s):
                return True
        return False

    return extend(0, {})


def weight_of_literal(lit: CLiteral) -> int:
    return weight(frozenset({lit}))


# ------------------------------------------------------------- equality

def equality_axioms(clauses: Iterable[Clause]) -> List[Clause]:
    """Reflexivity, symmetry, transitivity and congruence for the symbols in ``clauses``."""
    functions: Dict[str, int] = {}
    predicates: Dict[str, int] = {}

    def visit(t: CTerm) -> None:
        if isinstance(t, tuple):
            if len(t) > 1:
                functions[t[0]] = len(t) - 1
            for a in t[1:]:
                visit(a)

    for clause in clauses:
        for lit in clause:
            if lit[1] != EQUALITY and len(lit) > 2:
                predicates[lit[1]] = len(lit) - 2
            for a in lit[2:]:
                visit(a)

    axioms: List[Clause] = [
        frozenset({(True, EQUALITY, "?0", "?0")}),
        frozenset({(False, EQUALITY, "?0", "?1"), (True, EQUALITY, "?1", "?0")}),
        frozenset({(False, EQUALITY, "?0", "?1"), (False, EQUALITY, "?1", "?2"), (True, EQUALITY, "?0", "?2")}),
    ]
    for symbol, arity in sorted(functions.items()):
        for i in range(arity):
            args = [f"?{k + 2}" for k in range(arity)]
            left, right = list(args), list(args)
            left[i], right[i] = "?0", "?1"
            axioms.append(frozenset({
                (False, EQUALITY, "?0", "?1"),
                (True, EQUALITY, (symbol, *left), (symbol, *right)),
            }))
    for symbol, arity in sorted(predicates.items()):
        for i in range(arity):
            args = [f"?{k + 2}" for k in range(arity)]
            left, right = list(args), list(args)
            left[i], right[i] = "?0", "?1"
            axioms.append(frozenset({
                (False, EQUALITY, "?0", "?1"),
                (False, symbol, *left),
                (True, symbol, *right),
            }))
    return [normalize(a) for a in axioms]


def uses_equality(clauses: Iterable[Clause]) -> bool:
    return any(lit[1] == EQUALITY for clause in clauses for lit in clause)
