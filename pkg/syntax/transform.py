"""Structural operations on terms and formulas.

Everything here is a pure function over the frozen ASTs of ``terms`` and
``formulas``: free variables, renaming and substitution, the ``dep`` sugar,
and the small formula builders the proof rules are written with.
"""

import logging
from typing import Callable, Dict, FrozenSet, Iterable, List, NamedTuple, Sequence, Set, Union

from .errors import (
    ArityError,
    CaptureError,
    EmptyDependenceError,
    FormulaError,
    NonInjectiveRenamingError,
)
from .formulas import (
    BOTTOM,
    TOP,
    And,
    Bottom,
    Conj,
    Dep,
    Equal,
    Exists,
    FoFormula,
    Forall,
    Iff,
    IlFormula,
    Implies,
    Indep,
    Literal,
    Not,
    Or,
    RelAtom,
    TeamExists,
    TeamForall,
    TensorOr,
    Top,
)
from .printer import to_text
from .signature import Signature
from .terms import App, Const, ParamVar, TeamVar, Term, TermTuple

logger = logging.getLogger(__name__)

Node = Union[Term, TermTuple, FoFormula, IlFormula]


class FreeVars(NamedTuple):
    team: FrozenSet[str]
    params: FrozenSet[str]


# ------------------------------------------------------------------ traversal

def _map(node: Node, leaf: Callable[[Term, FrozenSet[str]], Term], bound: FrozenSet[str]) -> Node:
    """Rebuild ``node`` with every variable or constant leaf passed through ``leaf``."""
    match node:
        case tuple():
            return tuple(_map(t, leaf, bound) for t in node)
        case TeamVar() | ParamVar() | Const():
            return leaf(node, bound)
        case App(func, args):
            return App(func, _map(args, leaf, bound))
        case RelAtom(name, args):
            return RelAtom(name, _map(args, leaf, bound))
        case Equal(left, right):
            return Equal(_map(left, leaf, bound), _map(right, leaf, bound))
        case Top() | Bottom():
            return node
        case Not(body):
            return Not(_map(body, leaf, bound))
        case And(l, r) | Or(l, r) | Implies(l, r) | Iff(l, r) | TensorOr(l, r) | Conj(l, r):
            return type(node)(_map(l, leaf, bound), _map(r, leaf, bound))
        case Exists(var, body) | Forall(var, body) | TeamExists(var, body) | TeamForall(var, body):
            return type(node)(var, _map(body, leaf, bound | {var}))
        case Literal(positive, atom):
            return Literal(positive, _map(atom, leaf, bound))
        case Indep(first, second, third):
            return Indep(_map(first, leaf, bound), _map(second, leaf, bound), _map(third, leaf, bound))
        case Dep(terms):
            return Dep(_map(terms, leaf, bound))
    raise TypeError(f"not a term or formula: {node!r}")


def _walk(node: Node, visit: Callable[[object, FrozenSet[str]], None], bound: FrozenSet[str] = frozenset()) -> None:
    """Call ``visit(n, bound)`` on every node, pre-order."""
    visit(node, bound)
    match node:
        case tuple():
            for t in node:
                _walk(t, visit, bound)
        case App(_, args) | RelAtom(_, args):
            _walk(args, visit, bound)
        case Equal(left, right):
            _walk(left, visit, bound)
            _walk(right, visit, bound)
        case Not(body):
            _walk(body, visit, bound)
        case And(l, r) | Or(l, r) | Implies(l, r) | Iff(l, r) | TensorOr(l, r) | Conj(l, r):
            _walk(l, visit, bound)
            _walk(r, visit, bound)
        case Exists(var, body) | Forall(var, body) | TeamExists(var, body) | TeamForall(var, body):
            _walk(body, visit, bound | {var})
        case Literal(_, atom):
            _walk(atom, visit, bound)
        case Indep(first, second, third):
            _walk(first + second + third, visit, bound)
        case Dep(terms):
            _walk(terms, visit, bound)


# ------------------------------------------------------------ free variables

def free_vars(node: Node) -> FreeVars:
    """Free team variables and free parameter variables of a term, tuple or formula."""
    team: Set[str] = set()
    params: Set[str] = set()

    def visit(n: object, bound: FrozenSet[str]) -> None:
        if isinstance(n, TeamVar) and n.name not in bound:
            team.add(n.name)
        elif isinstance(n, ParamVar):
            params.add(n.name)

    _walk(node, visit)
    return FreeVars(frozenset(team), frozenset(params))


def free_team_vars(node: Node) -> FrozenSet[str]:
    return free_vars(node).team


def all_team_var_names(node: Node) -> Set[str]:
    """Every team variable name occurring in ``node``, free or bound."""
    names: Set[str] = set()

    def visit(n: object, bound: FrozenSet[str]) -> None:
        if isinstance(n, TeamVar):
            names.add(n.name)
        elif isinstance(n, (Exists, Forall, TeamExists, TeamForall)):
            names.add(n.var)

    _walk(node, visit)
    return names


def bound_team_vars(node: Node) -> Set[str]:
    names: Set[str] = set()

    def visit(n: object, bound: FrozenSet[str]) -> None:
        if isinstance(n, (Exists, Forall, TeamExists, TeamForall)):
            names.add(n.var)

    _walk(node, visit)
    return names


def relation_symbols(node: Node) -> Set[str]:
    names: Set[str] = set()

    def visit(n: object, bound: FrozenSet[str]) -> None:
        if isinstance(n, RelAtom):
            names.add(n.name)

    _walk(node, visit)
    return names


def symbols_of(node: Node) -> Signature:
    """The signature a single term or formula uses."""
    relations: Dict[str, int] = {}
    functions: Dict[str, int] = {}
    constants: Set[str] = set()

    def visit(n: object, bound: FrozenSet[str]) -> None:
        if isinstance(n, RelAtom):
            if relations.setdefault(n.name, len(n.args)) != len(n.args):
                raise ArityError(f"relation {n.name} used with arities {relations[n.name]} and {len(n.args)}")
        elif isinstance(n, App):
            if functions.setdefault(n.func, len(n.args)) != len(n.args):
                raise ArityError(f"function {n.func} used with arities {functions[n.func]} and {len(n.args)}")
        elif isinstance(n, Const):
            constants.add(n.name)

    _walk(node, visit)
    try:
        return Signature(relations=relations, functions=functions, constants=frozenset(constants))
    except ValueError as exc:
        raise ArityError(str(exc)) from exc


def formula_size(node: Node) -> int:
    """Number of formula nodes; terms do not count."""
    count = 0

    def visit(n: object, bound: FrozenSet[str]) -> None:
        nonlocal count
        if isinstance(n, (RelAtom, Equal, Top, Bottom, Not, And, Or, Implies, Iff, Exists, Forall,
                          Literal, Indep, Dep, TensorOr, Conj, TeamExists, TeamForall)):
            count += 1

    _walk(node, visit)
    # A literal wraps its atom; count the pair once.
    return count - _literal_count(node)


def _literal_count(node: Node) -> int:
    count = 0

    def visit(n: object, bound: FrozenSet[str]) -> None:
        nonlocal count
        if isinstance(n, Literal):
            count += 1

    _walk(node, visit)
    return count


def has_independence_atom(phi: IlFormula) -> bool:
    found = False

    def visit(n: object, bound: FrozenSet[str]) -> None:
        nonlocal found
        if isinstance(n, (Indep, Dep)):
            found = True

    _walk(phi, visit)
    return found


# ---------------------------------------------------------------- renaming

def rename_team_vars(node: Node, mapping: Dict[str, str]) -> Node:
    """Simultaneously rename free team variables.

    Args:
        node: a term, term tuple or formula
        mapping: old name -> new name; unmapped variables stay as they are

    Raises:
        NonInjectiveRenamingError: two free variables would end up with one name
        CaptureError: a new name would be bound by a quantifier of ``node``
    """
    free = free_vars(node).team
    images = [mapping.get(v, v) for v in sorted(free)]
    if len(set(images)) != len(images):
        raise NonInjectiveRenamingError(f"renaming {mapping} is not injective on {sorted(free)}")

    def leaf(term: Term, bound: FrozenSet[str]) -> Term:
        if isinstance(term, TeamVar) and term.name not in bound and term.name in mapping:
            target = mapping[term.name]
            if target in bound:
                raise CaptureError(f"renaming {term.name} to {target} is captured by a quantifier")
            return TeamVar(target)
        return term

    return _map(node, leaf, frozenset())


def substitute_param(phi: FoFormula, param: str, term: Term) -> FoFormula:
    """Replace every occurrence of ``$param`` by ``term``."""
    incoming = free_vars(term).team

    def leaf(t: Term, bound: FrozenSet[str]) -> Term:
        if isinstance(t, ParamVar) and t.name == param:
            if incoming & bound:
                raise CaptureError(f"substituting for ${param} captures {sorted(incoming & bound)}")
            return term
        return t

    return _map(phi, leaf, frozenset())


def rename_relations(phi: Node, mapping: Dict[str, str]) -> Node:
    """Rename relation symbols; arguments are untouched."""
    match phi:
        case RelAtom(name, args):
            return RelAtom(mapping.get(name, name), args)
        case Equal() | Top() | Bottom() | Indep() | Dep():
            return phi
        case Not(body):
            return Not(rename_relations(body, mapping))
        case And(l, r) | Or(l, r) | Implies(l, r) | Iff(l, r) | TensorOr(l, r) | Conj(l, r):
            return type(phi)(rename_relations(l, mapping), rename_relations(r, mapping))
        case Exists(v, body) | Forall(v, body) | TeamExists(v, body) | TeamForall(v, body):
            return type(phi)(v, rename_relations(body, mapping))
        case Literal(positive, atom):
            return Literal(positive, rename_relations(atom, mapping))
    raise TypeError(f"not a formula: {phi!r}")


def fresh_name(base: str, used: Iterable[str]) -> str:
    """``base`` with primes appended until it is not in ``used``."""
    taken = set(used)
    name = base
    while name in taken:
        name += "'"
    return name


# ----------------------------------------------------------- dep and FO view

def desugar_dep(phi: IlFormula) -> IlFormula:
    """Replace ``dep(t1, ..., tn)`` by ``indep(t1, ..., tn-1 ; tn ; tn)``."""
    match phi:
        case Dep(terms):
            if not terms:
                raise EmptyDependenceError("dep() needs at least one term")
            last = (terms[-1],)
            return Indep(terms[:-1], last, last)
        case Literal() | Indep():
            return phi
        case TensorOr(l, r) | Conj(l, r):
            return type(phi)(desugar_dep(l), desugar_dep(r))
        case TeamExists(v, body) | TeamForall(v, body):
            return type(phi)(v, desugar_dep(body))
    raise TypeError(f"not an independence logic formula: {phi!r}")


def fo_of_il(phi: IlFormula) -> FoFormula:
    """Read an atom-free independence logic formula as a first order one."""
    match phi:
        case Literal(positive, atom):
            return atom if positive else Not(atom)
        case TensorOr(l, r):
            return Or(fo_of_il(l), fo_of_il(r))
        case Conj(l, r):
            return And(fo_of_il(l), fo_of_il(r))
        case TeamExists(v, body):
            return Exists(v, fo_of_il(body))
        case TeamForall(v, body):
            return Forall(v, fo_of_il(body))
        case Indep() | Dep():
            raise FormulaError(f"{to_text(phi)} is not first order")
    raise TypeError(f"not an independence logic formula: {phi!r}")


# ------------------------------------------------------------------ builders

def conjoin(formulas: Sequence[FoFormula]) -> FoFormula:
    """Left-folded conjunction; the empty conjunction is ``true``."""
    if not formulas:
        return TOP
    result = formulas[0]
    for phi in formulas[1:]:
        result = And(result, phi)
    return result


def disjoin(formulas: Sequence[FoFormula]) -> FoFormula:
    """Left-folded disjunction; the empty disjunction is ``false``."""
    if not formulas:
        return BOTTOM
    result = formulas[0]
    for phi in formulas[1:]:
        result = Or(result, phi)
    return result


def big_and(context: Iterable[FoFormula]) -> FoFormula:
    """Conjunction of a context, ordered by canonical text."""
    return conjoin(sorted(set(context), key=to_text))


def conjuncts(phi: FoFormula) -> List[FoFormula]:
    """Flatten nested ``And`` nodes, left to right."""
    if isinstance(phi, And):
        return conjuncts(phi.left) + conjuncts(phi.right)
    return [phi]


def forall_prefix(variables: Iterable[str], body: FoFormula) -> FoFormula:
    """Universal closure over ``variables`` in lexicographic order, outermost first."""
    for v in sorted(set(variables), reverse=True):
        body = Forall(v, body)
    return body


def exists_prefix(variables: Iterable[str], body: FoFormula) -> FoFormula:
    for v in sorted(set(variables), reverse=True):
        body = Exists(v, body)
    return body


def tuple_equal(left: TermTuple, right: TermTuple) -> FoFormula:
    """Componentwise equality of two tuples of the same length."""
    if len(left) != len(right):
        raise FormulaError(f"tuples of lengths {len(left)} and {len(right)} cannot be compared")
    return conjoin([Equal(a, b) for a, b in zip(left, right)])


def universal_closure(phi: FoFormula) -> FoFormula:
    return forall_prefix(free_vars(phi).team, phi)
