"""Reading and writing the structure and team file formats.

Structure::

    model M {
      domain = {0, 1}
      rel R/2 = {(0, 1), (1, 1)}
      fun f/1 = {0 -> 1, 1 -> 0}
      const c = 0
    }

Team (a file may hold several, forming a family)::

    team X over (x, y) { (0, 1) (1, 1) }

``#`` starts a comment that runs to the end of the line.
"""

import itertools
import logging
import re
from pathlib import Path
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Tuple, Union

from syntax import Signature

from .errors import FileFormatError
from .structure import Element, ElementTuple, Structure
from .team import Team

logger = logging.getLogger(__name__)

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+|\#[^\n]*)
    |(?P<string>"(?:[^"\\\n]|\\.)*")
    |(?P<arrow>->)
    |(?P<word>[A-Za-z0-9_$']+(?:-(?!>)[A-Za-z0-9_$']+)*)
    |(?P<punct>[{}()\[\],=/:;|])
    """,
    re.VERBOSE,
)


class ScanToken(NamedTuple):
    kind: str
    value: str
    line: int


class Scanner:
    """Token stream shared by the line-oriented file formats."""

    def __init__(self, text: str, source: str = "<input>"):
        self.source = source
        self.tokens: List[ScanToken] = []
        pos, line = 0, 1
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if m is None:
                raise FileFormatError(f"unexpected character {text[pos]!r}", line, source)
            if m.lastgroup != "ws":
                value = m.group()
                if m.lastgroup == "string":
                    value = re.sub(r"\\([\\\"])", r"\1", value[1:-1])
                self.tokens.append(ScanToken(m.lastgroup, value, line))
            line += m.group().count("\n")
            pos = m.end()
        self.eof_line = line
        self.i = 0

    def peek(self) -> Optional[ScanToken]:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def at(self, value: str) -> bool:
        tok = self.peek()
        return tok is not None and tok.kind != "string" and tok.value == value

    def at_end(self) -> bool:
        return self.i >= len(self.tokens)

    @property
    def line(self) -> int:
        tok = self.peek()
        return tok.line if tok else self.eof_line

    def error(self, message: str) -> FileFormatError:
        return FileFormatError(message, self.line, self.source)

    def next(self) -> ScanToken:
        tok = self.peek()
        if tok is None:
            raise self.error("unexpected end of input")
        self.i += 1
        return tok

    def expect(self, value: str) -> ScanToken:
        if not self.at(value):
            tok = self.peek()
            raise self.error(f"expected {value!r}, found {tok.value if tok else 'end of input'!r}")
        return self.next()

    def word(self) -> str:
        tok = self.next()
        if tok.kind != "word":
            raise FileFormatError(f"expected a name, found {tok.value!r}", tok.line, self.source)
        return tok.value

    def string(self) -> str:
        tok = self.next()
        if tok.kind != "string":
            raise FileFormatError(f"expected a quoted string, found {tok.value!r}", tok.line, self.source)
        return tok.value

    def integer(self) -> int:
        tok = self.next()
        if tok.kind != "word" or not tok.value.isdigit():
            raise FileFormatError(f"expected a number, found {tok.value!r}", tok.line, self.source)
        return int(tok.value)

    def element_tuple(self) -> ElementTuple:
        """``(a, b)`` or a bare element."""
        if not self.at("("):
            return (self.word(),)
        self.expect("(")
        items: List[str] = []
        while not self.at(")"):
            items.append(self.word())
            if not self.at(")"):
                self.expect(",")
        self.expect(")")
        return tuple(items)

    def string_list(self) -> List[str]:
        self.expect("[")
        items: List[str] = []
        while not self.at("]"):
            items.append(self.string())
            if not self.at("]"):
                self.expect(",")
        self.expect("]")
        return items

    def word_list(self, opening: str = "[", closing: str = "]") -> List[str]:
        self.expect(opening)
        items: List[str] = []
        while not self.at(closing):
            items.append(self.word())
            if not self.at(closing):
                self.expect(",")
        self.expect(closing)
        return items


def _read_text(source: Union[str, Path]) -> Tuple[str, str]:
    if isinstance(source, Path):
        return source.read_text(), str(source)
    return source, "<input>"


# ------------------------------------------------------------------ structures

def _parse_structure(sc: Scanner) -> Structure:
    sc.expect("model")
    name = sc.word()
    start = sc.line
    sc.expect("{")
    domain: List[Element] = []
    relations: Dict[str, FrozenSet[ElementTuple]] = {}
    rel_arities: Dict[str, int] = {}
    functions: Dict[str, Dict[ElementTuple, Element]] = {}
    fun_arities: Dict[str, int] = {}
    constants: Dict[str, Element] = {}
    while not sc.at("}"):
        keyword = sc.word()
        if keyword == "domain":
            sc.expect("=")
            domain = sc.word_list("{", "}")
        elif keyword == "rel":
            rel = sc.word()
            sc.expect("/")
            arity = sc.integer()
            sc.expect("=")
            sc.expect("{")
            rows = set()
            while not sc.at("}"):
                row = sc.element_tuple()
                if len(row) != arity:
                    raise sc.error(f"tuple {row} does not fit {rel}/{arity}")
                rows.add(row)
                if not sc.at("}"):
                    sc.expect(",")
            sc.expect("}")
            relations[rel], rel_arities[rel] = frozenset(rows), arity
        elif keyword == "fun":
            fun = sc.word()
            sc.expect("/")
            arity = sc.integer()
            sc.expect("=")
            sc.expect("{")
            table: Dict[ElementTuple, Element] = {}
            while not sc.at("}"):
                args = sc.element_tuple()
                sc.expect("->")
                table[args] = sc.word()
                if not sc.at("}"):
                    sc.expect(",")
            sc.expect("}")
            functions[fun], fun_arities[fun] = table, arity
        elif keyword == "const":
            const = sc.word()
            sc.expect("=")
            constants[const] = sc.word()
        else:
            raise sc.error(f"unknown structure entry {keyword!r}")
    sc.expect("}")
    try:
        return Structure(
            name=name,
            signature=Signature(relations=rel_arities, functions=fun_arities, constants=frozenset(constants)),
            domain=tuple(domain),
            relations=relations,
            functions=functions,
            constants=constants,
        )
    except ValueError as exc:
        raise FileFormatError(f"structure {name}: {exc}", start, sc.source) from exc


def parse_structures(source: Union[str, Path]) -> List[Structure]:
    """Every structure in a text or file."""
    text, origin = _read_text(source)
    sc = Scanner(text, origin)
    out: List[Structure] = []
    while not sc.at_end():
        out.append(_parse_structure(sc))
    logger.debug("read %d structures from %s", len(out), origin)
    return out


def parse_structure(source: Union[str, Path]) -> Structure:
    structures = parse_structures(source)
    if len(structures) != 1:
        raise FileFormatError(f"expected exactly one structure, found {len(structures)}")
    return structures[0]


def structure_to_text(M: Structure) -> str:
    lines = [f"model {M.name} {{", f"  domain = {{{', '.join(M.domain)}}}"]
    for rel in sorted(M.signature.relations):
        rows = sorted(M.relations[rel], key=lambda r: tuple(M.index[e] for e in r))
        body = ", ".join("(" + ", ".join(r) + ")" for r in rows)
        lines.append(f"  rel {rel}/{M.signature.relations[rel]} = {{{body}}}")
    for fun in sorted(M.signature.functions):
        arity = M.signature.functions[fun]
        entries = [
            f"({', '.join(args)}) -> {M.functions[fun][args]}"
            for args in itertools.product(M.domain, repeat=arity)
        ]
        lines.append(f"  fun {fun}/{arity} = {{{', '.join(entries)}}}")
    for const in sorted(M.constants):
        lines.append(f"  const {const} = {M.constants[const]}")
    lines.append("}")
    return "\n".join(lines)


# ----------------------------------------------------------------------- teams

def parse_teams(source: Union[str, Path], M: Optional[Structure] = None) -> Dict[str, Team]:
    """Every team in a text or file, by name, in file order.

    Args:
        source: file text or path
        M: when given, every element must belong to its domain
    """
    text, origin = _read_text(source)
    sc = Scanner(text, origin)
    teams: Dict[str, Team] = {}
    while not sc.at_end():
        sc.expect("team")
        name = sc.word()
        if name in teams:
            raise sc.error(f"team {name} is defined twice")
        sc.expect("over")
        variables = sc.word_list("(", ")")
        sc.expect("{")
        rows = []
        while not sc.at("}"):
            row = sc.element_tuple() if variables else _empty_row(sc)
            if len(row) != len(variables):
                raise sc.error(f"row {row} does not fit variables {tuple(variables)}")
            if M is not None and not set(row) <= set(M.domain):
                raise sc.error(f"row {row} uses elements outside the domain of {M.name}")
            rows.append(row)
            if sc.at(","):
                sc.next()
        sc.expect("}")
        try:
            teams[name] = Team.of(variables, rows)
        except ValueError as exc:
            raise sc.error(f"team {name}: {exc}") from exc
    return teams


def _empty_row(sc: Scanner) -> ElementTuple:
    sc.expect("(")
    sc.expect(")")
    return ()


def parse_team(source: Union[str, Path], M: Optional[Structure] = None) -> Team:
    teams = parse_teams(source, M)
    if len(teams) != 1:
        raise FileFormatError(f"expected exactly one team, found {len(teams)}")
    return next(iter(teams.values()))


def team_to_text(X: Team, name: str = "X", order: Optional[Dict[Element, int]] = None) -> str:
    rows = " ".join("(" + ", ".join(r) + ")" for r in X.sorted_rows(order))
    return f"team {name} over ({', '.join(X.variables)}) {{ {rows} }}"
