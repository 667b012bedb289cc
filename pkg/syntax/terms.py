"""Terms of the first order language.

Team variables are bare identifiers; parameter variables carry a ``$``
prefix in concrete syntax, which is not part of ``ParamVar.name``.
"""

from dataclasses import dataclass
from typing import Tuple, Union


@dataclass(frozen=True, slots=True)
class TeamVar:
    name: str


@dataclass(frozen=True, slots=True)
class ParamVar:
    name: str


@dataclass(frozen=True, slots=True)
class Const:
    name: str


@dataclass(frozen=True, slots=True)
class App:
    func: str
    args: Tuple["Term", ...]


Term = Union[TeamVar, ParamVar, Const, App]
TermTuple = Tuple[Term, ...]


def is_variable(term: Term) -> bool:
    return isinstance(term, (TeamVar, ParamVar))


def term_depth(term: Term) -> int:
    if isinstance(term, App):
        return 1 + max((term_depth(a) for a in term.args), default=0)
    return 0
