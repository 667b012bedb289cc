"""Terms, first order formulas and NNF independence logic formulas."""

from .errors import (
    ArityError,
    BoundParameterError,
    CaptureError,
    EmptyDependenceError,
    FormulaError,
    NegationError,
    NonInjectiveRenamingError,
    ParameterInFormulaError,
    ParseError,
    UndeclaredSymbolError,
)
from .formulas import (
    BOTTOM,
    TOP,
    And,
    Atom,
    Bottom,
    Conj,
    Dep,
    Equal,
    Exists,
    FoFormula,
    Forall,
    Formula,
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
    is_fo,
    is_il,
    literal_as_fo,
)
from .parser import parse_fo, parse_il, parse_term, parse_terms
from .printer import term_to_text, to_text, tuple_to_text
from .signature import Signature
from .terms import App, Const, ParamVar, TeamVar, Term, TermTuple, term_depth
from .transform import (
    FreeVars,
    all_team_var_names,
    big_and,
    bound_team_vars,
    conjoin,
    conjuncts,
    desugar_dep,
    disjoin,
    exists_prefix,
    fo_of_il,
    forall_prefix,
    formula_size,
    free_team_vars,
    free_vars,
    fresh_name,
    has_independence_atom,
    relation_symbols,
    rename_relations,
    rename_team_vars,
    substitute_param,
    symbols_of,
    tuple_equal,
    universal_closure,
)

__all__ = [
    "ArityError",
    "BoundParameterError",
    "CaptureError",
    "EmptyDependenceError",
    "FormulaError",
    "NegationError",
    "NonInjectiveRenamingError",
    "ParameterInFormulaError",
    "ParseError",
    "UndeclaredSymbolError",
    "BOTTOM",
    "TOP",
    "And",
    "Atom",
    "Bottom",
    "Conj",
    "Dep",
    "Equal",
    "Exists",
    "FoFormula",
    "Forall",
    "Formula",
    "Iff",
    "IlFormula",
    "Implies",
    "Indep",
    "Literal",
    "Not",
    "Or",
    "RelAtom",
    "TeamExists",
    "TeamForall",
    "TensorOr",
    "Top",
    "is_fo",
    "is_il",
    "literal_as_fo",
    "parse_fo",
    "parse_il",
    "parse_term",
    "parse_terms",
    "term_to_text",
    "to_text",
    "tuple_to_text",
    "Signature",
    "App",
    "Const",
    "ParamVar",
    "TeamVar",
    "Term",
    "TermTuple",
    "term_depth",
    "FreeVars",
    "all_team_var_names",
    "big_and",
    "bound_team_vars",
    "conjoin",
    "conjuncts",
    "desugar_dep",
    "disjoin",
    "exists_prefix",
    "fo_of_il",
    "forall_prefix",
    "formula_size",
    "free_team_vars",
    "free_vars",
    "fresh_name",
    "has_independence_atom",
    "relation_symbols",
    "rename_relations",
    "rename_team_vars",
    "substitute_param",
    "symbols_of",
    "tuple_equal",
    "universal_closure",
]
