"""Reading and writing the sequent and proof file formats.

Sequent::

    sequent lit { ctx = ["forall x. (R(x) -> x = x)"] gamma = "R(x)" phi = "x = x" }

Proof::

    proof fo_lit {
      1: PS-lit gamma="R(x)" phi="x = x" ctx=["forall x. (R(x) -> x = x)"]
      2: PS-ent from [1] gamma="R(x)" phi="x = x" ctx=[]
    }

Step fields after the tag may come in any order; ``from``, ``var``,
``param``, ``theta`` and ``rels`` are only needed by the rules that use them.
"""

import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from model import FileFormatError, Scanner
from syntax import FormulaError, parse_fo, parse_il, to_text

from .errors import ProofFormatError, SequentError
from .sequents import Proof, ProofStep, RuleTag, Sequent

logger = logging.getLogger(__name__)

_TAGS = {tag.value: tag for tag in RuleTag}


def _read_text(source: Union[str, Path]) -> Tuple[str, str]:
    if isinstance(source, Path):
        return source.read_text(), str(source)
    return source, "<input>"


def _sequent(sc: Scanner, line: int, ctx: List[str], gamma: Optional[str], phi: Optional[str]) -> Sequent:
    if gamma is None or phi is None:
        raise ProofFormatError("a sequent needs gamma and phi", line, sc.source)
    try:
        return Sequent.of([parse_fo(c) for c in ctx], parse_fo(gamma), parse_il(phi))
    except (FormulaError, SequentError) as exc:
        raise ProofFormatError(str(exc), line, sc.source) from exc


# --------------------------------------------------------------------- sequents

def parse_sequents(source: Union[str, Path]) -> Dict[str, Sequent]:
    """Every named sequent in a text or file, in file order."""
    text, origin = _read_text(source)
    sc = Scanner(text, origin)
    out: Dict[str, Sequent] = {}
    while not sc.at_end():
        sc.expect("sequent")
        line = sc.line
        name = sc.word()
        if name in out:
            raise sc.error(f"sequent {name} is defined twice")
        sc.expect("{")
        ctx: List[str] = []
        gamma = phi = None
        while not sc.at("}"):
            key = sc.word()
            sc.expect("=")
            if key == "ctx":
                ctx = sc.string_list()
            elif key == "gamma":
                gamma = sc.string()
            elif key == "phi":
                phi = sc.string()
            else:
                raise sc.error(f"unknown sequent entry {key!r}")
        sc.expect("}")
        out[name] = _sequent(sc, line, ctx, gamma, phi)
    return out


def sequent_to_text(s: Sequent, name: str = "s") -> str:
    ctx = ", ".join(f'"{to_text(c)}"' for c in s.ordered_ctx())
    return f'sequent {name} {{ ctx = [{ctx}] gamma = "{to_text(s.gamma)}" phi = "{to_text(s.phi)}" }}'


# ----------------------------------------------------------------------- proofs

def _parse_step(sc: Scanner) -> ProofStep:
    line = sc.line
    index = sc.integer()
    sc.expect(":")
    tag_word = sc.word()
    if tag_word not in _TAGS:
        raise ProofFormatError(f"unknown rule {tag_word!r}", line, sc.source)
    premises: Tuple[int, ...] = ()
    ctx: List[str] = []
    gamma = phi = None
    var = param = None
    theta_index = None
    relations: Tuple[str, ...] = ()
    while not sc.at("}") and not _at_step(sc):
        key = sc.word()
        if key == "from":
            premises = tuple(_int(sc, w) for w in sc.word_list())
            continue
        sc.expect("=")
        match key:
            case "gamma":
                gamma = sc.string()
            case "phi":
                phi = sc.string()
            case "ctx":
                ctx = sc.string_list()
            case "var":
                var = sc.word()
            case "param":
                word = sc.word()
                if not word.startswith("$") or len(word) < 2:
                    raise sc.error(f"param expects a parameter variable, found {word!r}")
                param = word[1:]
            case "theta":
                theta_index = sc.integer()
            case "rels":
                relations = tuple(sc.word_list())
            case _:
                raise ProofFormatError(f"unknown step field {key!r}", line, sc.source)
    return ProofStep(
        index=index,
        rule=_TAGS[tag_word],
        sequent=_sequent(sc, line, ctx, gamma, phi),
        premises=premises,
        var=var,
        param=param,
        theta_index=theta_index,
        relations=relations,
    )


def _at_step(sc: Scanner) -> bool:
    tok = sc.peek()
    if tok is None or tok.kind != "word" or not tok.value.isdigit():
        return False
    following = sc.tokens[sc.i + 1] if sc.i + 1 < len(sc.tokens) else None
    return following is not None and following.value == ":"


def _int(sc: Scanner, word: str) -> int:
    if not word.isdigit():
        raise sc.error(f"expected a step number, found {word!r}")
    return int(word)


def parse_proofs(source: Union[str, Path]) -> List[Proof]:
    """Every proof in a text or file.

    Raises:
        ProofFormatError: malformed step or formula, with its line
        FileFormatError: malformed file structure
    """
    text, origin = _read_text(source)
    sc = Scanner(text, origin)
    out: List[Proof] = []
    while not sc.at_end():
        sc.expect("proof")
        name = sc.word()
        sc.expect("{")
        steps: List[ProofStep] = []
        while not sc.at("}"):
            steps.append(_parse_step(sc))
        sc.expect("}")
        if not steps:
            raise FileFormatError(f"proof {name} has no steps", sc.line, origin)
        out.append(Proof(name, tuple(steps)))
    logger.debug("read %d proofs from %s", len(out), origin)
    return out


def parse_proof(source: Union[str, Path]) -> Proof:
    proofs = parse_proofs(source)
    if len(proofs) != 1:
        raise FileFormatError(f"expected exactly one proof, found {len(proofs)}")
    return proofs[0]


def step_to_text(step: ProofStep) -> str:
    s = step.sequent
    parts = [f"{step.index}: {step.rule.value}"]
    if step.premises:
        parts.append(f"from [{', '.join(str(i) for i in step.premises)}]")
    parts.append(f'gamma="{to_text(s.gamma)}"')
    parts.append(f'phi="{to_text(s.phi)}"')
    parts.append("ctx=[" + ", ".join(f'"{to_text(c)}"' for c in s.ordered_ctx()) + "]")
    if step.var is not None:
        parts.append(f"var={step.var}")
    if step.param is not None:
        parts.append(f"param=${step.param}")
    if step.theta_index is not None:
        parts.append(f"theta={step.theta_index}")
    if step.relations:
        parts.append(f"rels=[{', '.join(step.relations)}]")
    return " ".join(parts)


def proof_to_text(proof: Proof) -> str:
    lines = [f"proof {proof.name} {{"]
    lines.extend("  " + step_to_text(step) for step in proof.steps)
    lines.append("}")
    return "\n".join(lines)
