"""Witness trees for entailment semantics and their indented text form.

One node per line, two spaces of indentation per depth::

    ES-or h'={$w1=0, $w2=1} gamma1="x = $w1" gamma2="x = $w2"
      ES-lit
      ES-lit
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from model import FileFormatError, Scanner
from syntax import FoFormula, ParseError, parse_fo, to_text

RULES = ("ES-lit", "ES-ind", "ES-or", "ES-and", "ES-exists", "ES-forall")
_ARITY = {"ES-lit": 0, "ES-ind": 0, "ES-or": 2, "ES-and": 2, "ES-exists": 1, "ES-forall": 1}
_FORMULA_KEYS = {"ES-or": ("gamma1", "gamma2"), "ES-exists": ("gamma'",), "ES-forall": ("gamma'",)}


class WitnessShapeError(ValueError):
    """A witness tree does not follow the shape of its formula."""


@dataclass(frozen=True, slots=True)
class WitnessNode:
    """One clause application.

    ``bindings`` extends the parameter assignment (names without ``$``);
    ``formulas`` holds the two cover definitions of a disjunction or the one
    definition of a quantifier step.
    """

    rule: str
    bindings: Tuple[Tuple[str, str], ...] = ()
    formulas: Tuple[FoFormula, ...] = ()
    children: Tuple["WitnessNode", ...] = ()

    def __post_init__(self) -> None:
        if self.rule not in RULES:
            raise WitnessShapeError(f"unknown witness rule {self.rule}")
        if len(self.children) != _ARITY[self.rule]:
            raise WitnessShapeError(f"{self.rule} needs {_ARITY[self.rule]} subtrees, got {len(self.children)}")
        if len(self.formulas) != len(_FORMULA_KEYS.get(self.rule, ())):
            raise WitnessShapeError(f"{self.rule} carries {len(_FORMULA_KEYS.get(self.rule, ()))} formulas")


def witness_to_text(node: WitnessNode, depth: int = 0) -> str:
    parts = [node.rule]
    if node.bindings:
        parts.append("h'={" + ", ".join(f"${p}={e}" for p, e in node.bindings) + "}")
    for key, phi in zip(_FORMULA_KEYS.get(node.rule, ()), node.formulas):
        parts.append(f'{key}="{to_text(phi)}"')
    lines = ["  " * depth + " ".join(parts)]
    lines.extend(witness_to_text(child, depth + 1) for child in node.children)
    return "\n".join(lines)


def _parse_line(text: str, number: int) -> Tuple[str, Tuple[Tuple[str, str], ...], Dict[str, FoFormula]]:
    sc = Scanner(text, "<witness>")
    rule = sc.word()
    bindings: List[Tuple[str, str]] = []
    formulas: Dict[str, FoFormula] = {}
    while not sc.at_end():
        key = sc.word()
        sc.expect("=")
        if key == "h'":
            sc.expect("{")
            while not sc.at("}"):
                param = sc.word()
                if not param.startswith("$"):
                    raise FileFormatError(f"binding {param} is not a parameter variable", number)
                sc.expect("=")
                bindings.append((param[1:], sc.word()))
                if not sc.at("}"):
                    sc.expect(",")
            sc.expect("}")
        else:
            try:
                formulas[key] = parse_fo(sc.string())
            except ParseError as exc:
                raise FileFormatError(str(exc), number) from exc
    return rule, tuple(bindings), formulas


def parse_witness(text: str) -> WitnessNode:
    """Inverse of ``witness_to_text``."""
    entries = []
    for number, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        indent = len(raw) - len(raw.lstrip(" "))
        if indent % 2:
            raise FileFormatError("indentation must be a multiple of two spaces", number)
        rule, bindings, formulas = _parse_line(raw.strip(), number)
        keys = _FORMULA_KEYS.get(rule, ())
        if set(formulas) != set(keys):
            raise FileFormatError(f"{rule} expects formulas {list(keys)}, got {sorted(formulas)}", number)
        entries.append((indent // 2, number, rule, bindings, tuple(formulas[k] for k in keys)))
    if not entries:
        raise FileFormatError("empty witness tree")

    pos = 0

    def build(depth: int) -> WitnessNode:
        nonlocal pos
        level, number, rule, bindings, formulas = entries[pos]
        if level != depth:
            raise FileFormatError(f"expected depth {depth}, found {level}", number)
        pos += 1
        children = []
        while pos < len(entries) and entries[pos][0] > depth:
            children.append(build(depth + 1))
        try:
            return WitnessNode(rule, bindings, formulas, tuple(children))
        except WitnessShapeError as exc:
            raise FileFormatError(str(exc), number) from exc

    root = build(0)
    if pos != len(entries):
        raise FileFormatError("more than one root node", entries[pos][1])
    return root
