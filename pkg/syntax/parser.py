"""Recursive descent parser for terms, first order formulas and NNF independence logic.

Grammar (quantifier scope extends as far right as possible)::

    term    := $p | name | name(term, ...)
    fo      := imp ('<->' imp)*
    imp     := or ('->' imp)?
    or      := and ('|' and)*
    and     := unary ('&' unary)*
    unary   := 'not' unary | ('exists' | 'forall') x '.' fo | primary
    primary := 'true' | 'false' | '(' fo ')' | R(term, ...) | term '=' term | term '!=' term

    il      := iland ('\\/' iland)*
    iland   := ilunary ('/\\' ilunary)*
    ilunary := '~' ilunary | ('exists' | 'forall') x '.' il | ilprim
    ilprim  := '(' il ')' | indep(terms ; terms ; terms) | dep(terms) | atom | term '!=' term

A bare name is a constant when the signature declares it or when it starts
with a digit; otherwise it is a team variable.  Without a signature the
symbols are inferred from use, with arities checked for consistency.
"""

import logging
import re
from typing import Dict, List, NamedTuple, Optional, Tuple

from .errors import (
    ArityError,
    BoundParameterError,
    NegationError,
    ParameterInFormulaError,
    ParseError,
    UndeclaredSymbolError,
)
from .formulas import (
    BOTTOM,
    TOP,
    And,
    Atom,
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
)
from .signature import Signature
from .terms import App, Const, ParamVar, TeamVar, Term, TermTuple

logger = logging.getLogger(__name__)

KEYWORDS = frozenset({"true", "false", "not", "exists", "forall", "indep", "dep"})

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
    |(?P<param>\$[A-Za-z0-9_][A-Za-z0-9_']*)
    |(?P<ident>[A-Za-z0-9_][A-Za-z0-9_']*)
    |(?P<op><->|->|\\/|/\\|!=|[=~&|(),;.])
    """,
    re.VERBOSE,
)


class Token(NamedTuple):
    kind: str
    value: str
    pos: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append(Token(m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(Token("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, sig: Optional[Signature], independence: bool):
        self.tokens = tokenize(text)
        self.i = 0
        self.sig = sig
        self.independence = independence
        self.relations: Dict[str, int] = {}
        self.functions: Dict[str, int] = {}

    # -- token helpers

    def peek(self, ahead: int = 0) -> Token:
        return self.tokens[min(self.i + ahead, len(self.tokens) - 1)]

    def at(self, *values: str) -> bool:
        tok = self.peek()
        return tok.kind in ("op", "ident") and tok.value in values

    def advance(self) -> Token:
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, value: str) -> Token:
        tok = self.peek()
        if tok.value != value or tok.kind not in ("op", "ident"):
            raise ParseError(f"expected {value!r}, found {tok.value or 'end of input'!r}", tok.pos)
        return self.advance()

    def finish(self) -> None:
        tok = self.peek()
        if tok.kind != "eof":
            raise ParseError(f"unexpected {tok.value!r} after formula", tok.pos)

    def is_name(self, tok: Token) -> bool:
        return tok.kind == "ident" and tok.value not in KEYWORDS

    # -- symbols

    def use_relation(self, name: str, arity: int, pos: int) -> None:
        if self.sig is not None:
            if name not in self.sig.relations:
                raise UndeclaredSymbolError(f"undeclared relation {name}", pos)
            if self.sig.relations[name] != arity:
                raise ArityError(f"relation {name} has arity {self.sig.relations[name]}, used with {arity}", pos)
            return
        if name in self.functions:
            raise ArityError(f"{name} is used both as a function and as a relation", pos)
        if self.relations.setdefault(name, arity) != arity:
            raise ArityError(f"relation {name} used with arities {self.relations[name]} and {arity}", pos)

    def use_function(self, name: str, arity: int, pos: int) -> None:
        if arity == 0:
            raise ArityError(f"function {name} applied to no arguments", pos)
        if self.sig is not None:
            if name not in self.sig.functions:
                raise UndeclaredSymbolError(f"undeclared function {name}", pos)
            if self.sig.functions[name] != arity:
                raise ArityError(f"function {name} has arity {self.sig.functions[name]}, used with {arity}", pos)
            return
        if name in self.relations:
            raise ArityError(f"{name} is used both as a relation and as a function", pos)
        if self.functions.setdefault(name, arity) != arity:
            raise ArityError(f"function {name} used with arities {self.functions[name]} and {arity}", pos)

    def is_constant(self, name: str) -> bool:
        return name[0].isdigit() or (self.sig is not None and name in self.sig.constants)

    # -- terms

    def term(self) -> Term:
        tok = self.peek()
        if tok.kind == "param":
            if self.independence:
                raise ParameterInFormulaError(f"parameter variable {tok.value} in an independence logic formula", tok.pos)
            self.advance()
            return ParamVar(tok.value[1:])
        if not self.is_name(tok):
            raise ParseError(f"expected a term, found {tok.value or 'end of input'!r}", tok.pos)
        self.advance()
        if self.at("("):
            args = self.term_list("(", ")")
            self.use_function(tok.value, len(args), tok.pos)
            return App(tok.value, args)
        if self.is_constant(tok.value):
            return Const(tok.value)
        if self.sig is not None and (tok.value in self.sig.relations or tok.value in self.sig.functions):
            raise ArityError(f"{tok.value} is a relation or function symbol, not a term", tok.pos)
        return TeamVar(tok.value)

    def term_list(self, opening: str, closing: str, stops: Tuple[str, ...] = ()) -> TermTuple:
        if opening:
            self.expect(opening)
        terms: List[Term] = []
        if not self.at(closing, *stops):
            terms.append(self.term())
            while self.at(","):
                self.advance()
                terms.append(self.term())
        if closing and not stops:
            self.expect(closing)
        return tuple(terms)

    # -- atoms

    def atom(self) -> Tuple[Atom, bool]:
        """An atom and whether it was written positively (``!=`` is negative)."""
        tok = self.peek()
        if self.is_name(tok) and self.peek(1).value == "(" and self.peek(1).kind == "op":
            self.advance()
            args = self.term_list("(", ")")
            if not self.at("=", "!="):
                self.use_relation(tok.value, len(args), tok.pos)
                return RelAtom(tok.value, args), True
            self.use_function(tok.value, len(args), tok.pos)
            left: Term = App(tok.value, args)
        else:
            left = self.term()
        op = self.peek()
        if not self.at("=", "!="):
            raise ParseError(f"expected '=' or '!=' after a term, found {op.value or 'end of input'!r}", op.pos)
        self.advance()
        return Equal(left, self.term()), op.value == "="

    def bound_variable(self) -> str:
        tok = self.peek()
        if tok.kind == "param":
            raise BoundParameterError(f"parameter variable {tok.value} cannot be quantified", tok.pos)
        if not self.is_name(tok):
            raise ParseError(f"expected a variable, found {tok.value or 'end of input'!r}", tok.pos)
        if self.is_constant(tok.value):
            raise ParseError(f"{tok.value} is a constant and cannot be quantified", tok.pos)
        self.advance()
        self.expect(".")
        return tok.value

    # -- first order

    def fo(self) -> FoFormula:
        left = self.fo_implication()
        while self.at("<->"):
            self.advance()
            left = Iff(left, self.fo_implication())
        return left

    def fo_implication(self) -> FoFormula:
        left = self.fo_or()
        if self.at("->"):
            self.advance()
            return Implies(left, self.fo_implication())
        return left

    def fo_or(self) -> FoFormula:
        left = self.fo_and()
        while self.at("|"):
            self.advance()
            left = Or(left, self.fo_and())
        return left

    def fo_and(self) -> FoFormula:
        left = self.fo_unary()
        while self.at("&"):
            self.advance()
            left = And(left, self.fo_unary())
        return left

    def fo_unary(self) -> FoFormula:
        if self.at("not"):
            self.advance()
            return Not(self.fo_unary())
        if self.at("exists", "forall"):
            kind = self.advance().value
            var = self.bound_variable()
            body = self.fo()
            return Exists(var, body) if kind == "exists" else Forall(var, body)
        return self.fo_primary()

    def fo_primary(self) -> FoFormula:
        tok = self.peek()
        if self.at("true"):
            self.advance()
            return TOP
        if self.at("false"):
            self.advance()
            return BOTTOM
        if self.at("("):
            self.advance()
            inner = self.fo()
            self.expect(")")
            return inner
        if self.at("~", "\\/", "/\\", "indep", "dep"):
            raise ParseError(f"{tok.value!r} belongs to independence logic, not first order logic", tok.pos)
        atom, positive = self.atom()
        return atom if positive else Not(atom)

    # -- independence logic

    def il(self) -> IlFormula:
        left = self.il_and()
        while self.at("\\/"):
            self.advance()
            left = TensorOr(left, self.il_and())
        return left

    def il_and(self) -> IlFormula:
        left = self.il_unary()
        while self.at("/\\"):
            self.advance()
            left = Conj(left, self.il_unary())
        return left

    def il_unary(self) -> IlFormula:
        if self.at("~"):
            tok = self.advance()
            operand = self.il_unary()
            if not (isinstance(operand, Literal) and operand.positive):
                raise NegationError("negation may only be applied to an atom", tok.pos)
            return Literal(False, operand.atom)
        if self.at("exists", "forall"):
            kind = self.advance().value
            var = self.bound_variable()
            body = self.il()
            return TeamExists(var, body) if kind == "exists" else TeamForall(var, body)
        return self.il_primary()

    def il_primary(self) -> IlFormula:
        tok = self.peek()
        if self.at("("):
            self.advance()
            inner = self.il()
            self.expect(")")
            return inner
        if self.at("indep"):
            self.advance()
            self.expect("(")
            first = self.term_list("", "", (";",))
            self.expect(";")
            second = self.term_list("", "", (";",))
            self.expect(";")
            third = self.term_list("", ")")
            if not second or not third:
                logger.warning("independence atom at offset %d has an empty second or third tuple", tok.pos)
            return Indep(first, second, third)
        if self.at("dep"):
            self.advance()
            return Dep(self.term_list("(", ")"))
        if self.at("not"):
            raise NegationError("independence logic negation is written '~' and applies to atoms only", tok.pos)
        if self.at("true", "false", "&", "|", "->", "<->"):
            raise ParseError(f"{tok.value!r} belongs to first order logic, not independence logic", tok.pos)
        atom, positive = self.atom()
        return Literal(positive, atom)


def parse_fo(text: str, sig: Optional[Signature] = None) -> FoFormula:
    """Parse a first order formula.

    Args:
        text: concrete syntax
        sig: declared symbols; ``None`` infers them from use

    Raises:
        ParseError: or one of its subclasses, with the offending offset
    """
    parser = _Parser(text, sig, independence=False)
    phi = parser.fo()
    parser.finish()
    return phi


def parse_il(text: str, sig: Optional[Signature] = None) -> IlFormula:
    """Parse an independence logic formula in negation normal form."""
    parser = _Parser(text, sig, independence=True)
    phi = parser.il()
    parser.finish()
    return phi


def parse_term(text: str, sig: Optional[Signature] = None) -> Term:
    parser = _Parser(text, sig, independence=False)
    t = parser.term()
    parser.finish()
    return t


def parse_terms(text: str, sig: Optional[Signature] = None) -> TermTuple:
    """A comma separated, possibly empty, list of terms."""
    parser = _Parser(text, sig, independence=False)
    terms = parser.term_list("", "", ("\0",)) if parser.peek().kind != "eof" else ()
    parser.finish()
    return terms
