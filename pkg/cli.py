"""Command line interface of the independence logic workbench.

Exit codes: 0 positive verdict, 1 negative verdict, 2 error, 3 conditional
or unknown.  ``--format machine`` prints one ``key=value`` per line; line
breaks inside a value are written as ``\\n``.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from config import OUTPUT_FORMATS, Settings, settings as default_settings
from entailment import check_witness, eval_entailment_witnessed, parse_witness, witness_to_text
from general import (
    GeneralModel,
    check_general_closure,
    check_theta_closed,
    parse_theta,
    theta_to_text,
)
from model import (
    Structure,
    Team,
    parse_structure,
    parse_structures,
    parse_teams,
    structure_to_text,
    team_to_text,
)
from proof import (
    Overall,
    check_proof,
    derive_dep,
    derive_fo,
    parse_proofs,
    parse_sequents,
    proof_to_text,
    sequent_to_text,
    validate_sequent,
)
from semantics import eval_full, eval_gts
from syntax import Dep, parse_fo, parse_il, to_text

logger = logging.getLogger(__name__)

EXIT_POSITIVE = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2
EXIT_OPEN = 3


class Report:
    """Collects a command's output in the selected format."""

    def __init__(self, command: str, fmt: str):
        self.fmt = fmt
        self.lines: List[str] = []
        self.put("command", command, show=False)

    @property
    def machine(self) -> bool:
        return self.fmt == "machine"

    def put(self, key: str, value: object, plain: Optional[str] = None, show: bool = True) -> None:
        """Record ``key=value``; plain output shows ``plain`` or ``key: value``."""
        if isinstance(value, bool):
            value = str(value).lower()
        if self.machine:
            self.lines.append(f"{key}={str(value).replace(chr(10), chr(92) + 'n')}")
        elif show:
            self.lines.append(plain if plain is not None else f"{key}: {value}")

    def render(self) -> str:
        return "\n".join(self.lines)


class CommandError(ValueError):
    pass


def _params(items: Optional[Sequence[str]]) -> Dict[str, str]:
    h: Dict[str, str] = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep:
            raise CommandError(f"parameter binding {item!r} is not of the form $p=e")
        h[name.strip().lstrip("$")] = value.strip()
    return h


def _structure(path: str) -> Structure:
    return parse_structure(Path(path))


def _pick_team(teams: Dict[str, Team], name: Optional[str]) -> Team:
    if name is not None:
        if name not in teams:
            raise CommandError(f"no team named {name}; the file holds {sorted(teams)}")
        return teams[name]
    if len(teams) != 1:
        raise CommandError(f"the file holds {len(teams)} teams; choose one with --name")
    return next(iter(teams.values()))


def _one_line(text: str) -> str:
    return " ".join(text.split())


# ---------------------------------------------------------------- commands

def cmd_parse(args: argparse.Namespace, cfg: Settings, out: Report) -> int:
    if args.file:
        path = Path(args.file)
        kind = args.kind
        if kind == "structure":
            texts = [structure_to_text(M) for M in parse_structures(path)]
        elif kind == "team":
            texts = [team_to_text(X, name) for name, X in parse_teams(path).items()]
        elif kind == "theta":
            texts = [theta_to_text(parse_theta(path))]
        elif kind == "sequent":
            texts = [sequent_to_text(s, name) for name, s in parse_sequents(path).items()]
        else:
            texts = [proof_to_text(p) for p in parse_proofs(path)]
        out.put("verdict", "ok", plain="\n".join(texts))
        return EXIT_POSITIVE
    if args.phi is None:
        raise CommandError("parse needs --phi or --file")
    phi = parse_fo(args.phi) if args.fo else parse_il(args.phi)
    out.put("formula", to_text(phi), plain=to_text(phi))
    out.put("verdict", "ok", show=False)
    return EXIT_POSITIVE


def cmd_eval_team(args: argparse.Namespace, cfg: Settings, out: Report) -> int:
    M = _structure(args.model)
    X = _pick_team(parse_teams(Path(args.team), M), args.name)
    phi = parse_il(args.phi, M.signature)
    satisfied = eval_full(M, X, phi)
    out.put("satisfied", satisfied)
    return EXIT_POSITIVE if satisfied else EXIT_NEGATIVE


def cmd_eval_gts(args: argparse.Namespace, cfg: Settings, out: Report) -> int:
    M = _structure(args.model)
    teams = parse_teams(Path(args.family), M)
    G = GeneralModel.from_teams(M, teams.values())
    if args.check_closure:
        universe = sorted({v for X in teams.values() for v in X.variables})
        verdict = check_general_closure(G, universe, args.bound or cfg.closure_bound)
        out.put("closed", verdict.closed)
        if not verdict.closed:
            out.put("violation", f"{verdict.formula} {verdict.parameters} defines {verdict.team}")
    X = _pick_team(teams, args.name)
    phi = parse_il(args.phi, M.signature)
    satisfied = eval_gts(M, G.teams, X, phi)
    out.put("satisfied", satisfied)
    return EXIT_POSITIVE if satisfied else EXIT_NEGATIVE


def cmd_eval_ent(args: argparse.Namespace, cfg: Settings, out: Report) -> int:
    M = _structure(args.model)
    gamma = parse_fo(args.gamma, M.signature)
    phi = parse_il(args.phi, M.signature)
    witness = eval_entailment_witnessed(M, gamma, _params(args.param), phi)
    out.put("satisfied", witness is not None)
    if witness is not None:
        text = witness_to_text(witness)
        if args.witness_out:
            Path(args.witness_out).write_text(text + "\n")
        out.put("witness", text, plain="witness:\n" + text)
    return EXIT_POSITIVE if witness is not None else EXIT_NEGATIVE


def cmd_witness(args: argparse.Namespace, cfg: Settings, out: Report) -> int:
    M = _structure(args.model)
    gamma = parse_fo(args.gamma, M.signature)
    phi = parse_il(args.phi, M.signature)
    tree = parse_witness(Path(args.witness).read_text())
    accepted = check_witness(M, gamma, _params(args.param), phi, tree)
    out.put("verdict", "accepted" if accepted else "rejected")
    return EXIT_POSITIVE if accepted else EXIT_NEGATIVE


def cmd_check_proof(args: argparse.Namespace, cfg: Settings, out: Report) -> int:
    theta = parse_theta(Path(args.theta)) if args.theta else None
    proofs = parse_proofs(Path(args.proof))
    if args.name:
        proofs = [p for p in proofs if p.name == args.name]
        if not proofs:
            raise CommandError(f"no proof named {args.name}")
    overall = []
    for proof in proofs:
        report = check_proof(proof, theta, cfg.prover_budget())
        out.put("proof", proof.name, plain=f"proof {proof.name}")
        for step in report.steps:
            detail = f"{step.status.value}: {step.reason}" if step.reason else step.status.value
            out.put(f"step.{step.index}", detail, plain=f"  {step.index}: {step.rule} {detail}")
        out.put("verdict", report.overall.value)
        overall.append(report.overall)
    if Overall.REJECTED in overall:
        return EXIT_NEGATIVE
    if Overall.CONDITIONALLY_VERIFIED in overall:
        return EXIT_OPEN
    return EXIT_POSITIVE


def cmd_derive(args: argparse.Namespace, cfg: Settings, out: Report) -> int:
    gamma = parse_fo(args.gamma)
    phi = parse_il(args.phi)
    if isinstance(phi, Dep):
        *terms, target = phi.terms
        proof = derive_dep(gamma, tuple(terms), target, name=args.name)
    else:
        proof = derive_fo(gamma, phi, name=args.name)
    text = proof_to_text(proof)
    if args.out:
        Path(args.out).write_text(text + "\n")
        out.put("written", args.out)
    else:
        out.put("proof_text", text, plain=text)
    out.put("length", proof.length, show=False)
    if not args.check:
        out.put("verdict", "derived", show=False)
        return EXIT_POSITIVE
    report = check_proof(proof, None, cfg.prover_budget())
    out.put("verdict", report.overall.value)
    if report.overall == Overall.REJECTED:
        return EXIT_NEGATIVE
    return EXIT_OPEN if report.overall == Overall.CONDITIONALLY_VERIFIED else EXIT_POSITIVE


def cmd_validate_seq(args: argparse.Namespace, cfg: Settings, out: Report) -> int:
    theta = parse_theta(Path(args.theta)) if args.theta else None
    sequents = parse_sequents(Path(args.seq))
    if args.name:
        if args.name not in sequents:
            raise CommandError(f"no sequent named {args.name}")
        sequents = {args.name: sequents[args.name]}
    max_size = args.max_size or cfg.max_size
    all_valid = True
    for name, s in sequents.items():
        verdict = validate_sequent(s, max_size, theta, limit=args.limit)
        out.put("sequent", name, plain=f"sequent {name}")
        out.put("valid", verdict.valid)
        out.put("max_size", verdict.max_size)
        if not verdict.exhaustive:
            out.put("exhaustive", False)
        if verdict.counterexample is not None:
            all_valid = False
            text = structure_to_text(verdict.counterexample)
            out.put("counterexample", _one_line(text), plain="counterexample:\n" + text)
            if verdict.assignment:
                binding = ", ".join(f"${p}={e}" for p, e in sorted(verdict.assignment.items()))
                out.put("assignment", binding)
    return EXIT_POSITIVE if all_valid else EXIT_NEGATIVE


def cmd_theta_check(args: argparse.Namespace, cfg: Settings, out: Report) -> int:
    M = _structure(args.model)
    theta = parse_theta(Path(args.theta), M.signature)
    if args.family:
        G = GeneralModel.from_teams(M, parse_teams(Path(args.family), M).values())
    else:
        G = GeneralModel(structure=M)
    verdict = check_theta_closed(G, theta)
    out.put("closed", verdict.closed)
    if verdict.violation is not None:
        out.put("violation", verdict.violation)
    return EXIT_POSITIVE if verdict.closed else EXIT_NEGATIVE


def cmd_selftest(args: argparse.Namespace, cfg: Settings, out: Report) -> int:
    from evaluation import SelfTestSuite

    results = SelfTestSuite(cfg).run_all()
    for r in results:
        status = "pass" if r.passed else "fail"
        detail = f"{status} cases={r.cases} violations={r.violations} ms={r.elapsed_ms}"
        if r.counterexample:
            detail += f" first={r.counterexample}"
        out.put(f"check.{r.kind.value}", detail)
    passed = all(r.passed for r in results)
    out.put("verdict", "pass" if passed else "fail")
    return EXIT_POSITIVE if passed else EXIT_NEGATIVE


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=OUTPUT_FORMATS, help="plain or machine output")
    common.add_argument("--prover-depth", type=int, help="resolution term depth budget")
    common.add_argument("--prover-ms", type=int, help="prover time budget in milliseconds")
    common.add_argument("--cm-size", type=int, help="largest countermodel size the prover tries")
    common.add_argument("--max-size", type=int, help="largest structure size for validity checks")
    common.add_argument("--bound", type=int, help="formula size bound for closure checks")

    parser = argparse.ArgumentParser(prog="indep", description="Independence logic workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", parents=[common], help="parse and pretty print a formula or file")
    p.add_argument("--phi", help="formula text")
    p.add_argument("--fo", action="store_true", help="read --phi as first order logic")
    p.add_argument("--file", help="file to read")
    p.add_argument("--kind", choices=("structure", "team", "theta", "sequent", "proof"), default="structure")
    p.set_defaults(handler=cmd_parse)

    p = sub.add_parser("eval-team", parents=[common], help="team semantics on an explicit team")
    p.add_argument("--model", required=True)
    p.add_argument("--team", required=True)
    p.add_argument("--name", help="team to use when the file holds several")
    p.add_argument("--phi", required=True)
    p.set_defaults(handler=cmd_eval_team)

    p = sub.add_parser("eval-gts", parents=[common], help="general team semantics over a team family")
    p.add_argument("--model", required=True)
    p.add_argument("--family", required=True, help="team file whose teams form the family")
    p.add_argument("--name", help="team of the family to evaluate on")
    p.add_argument("--phi", required=True)
    p.add_argument("--check-closure", action="store_true", help="also search for a missing definable team")
    p.set_defaults(handler=cmd_eval_gts)

    p = sub.add_parser("eval-ent", parents=[common], help="entailment semantics with a witness tree")
    p.add_argument("--model", required=True)
    p.add_argument("--gamma", required=True)
    p.add_argument("--param", action="append", help="parameter binding $p=e, repeatable")
    p.add_argument("--phi", required=True)
    p.add_argument("--witness-out", help="write the witness tree to this file")
    p.set_defaults(handler=cmd_eval_ent)

    p = sub.add_parser("witness", parents=[common], help="check a witness tree")
    p.add_argument("--model", required=True)
    p.add_argument("--gamma", required=True)
    p.add_argument("--param", action="append")
    p.add_argument("--phi", required=True)
    p.add_argument("--witness", required=True)
    p.set_defaults(handler=cmd_witness)

    p = sub.add_parser("check-proof", parents=[common], help="check every proof in a file")
    p.add_argument("--proof", required=True)
    p.add_argument("--name", help="check only this proof")
    p.add_argument("--theta", help="relation existence theory for PS-theta steps")
    p.set_defaults(handler=cmd_check_proof)

    p = sub.add_parser("derive", parents=[common], help="generate a PS-FO or PS-dep proof")
    p.add_argument("--gamma", required=True)
    p.add_argument("--phi", required=True, help="first order formula or dep(...) atom")
    p.add_argument("--name", default="derived")
    p.add_argument("--out", help="write the proof to this file")
    p.add_argument("--check", action="store_true", help="check the generated proof")
    p.set_defaults(handler=cmd_derive)

    p = sub.add_parser("validate-seq", parents=[common], help="test sequents on small structures")
    p.add_argument("--seq", required=True)
    p.add_argument("--name", help="validate only this sequent")
    p.add_argument("--theta", help="restrict to structures closed under this theory")
    p.add_argument("--limit", type=int, help="structures tried per size")
    p.set_defaults(handler=cmd_validate_seq)

    p = sub.add_parser("theta-check", parents=[common], help="is a general model closed under a theory")
    p.add_argument("--model", required=True)
    p.add_argument("--theta", required=True)
    p.add_argument("--family", help="team file of an explicit family; the full family otherwise")
    p.set_defaults(handler=cmd_theta_check)

    p = sub.add_parser("selftest", parents=[common], help="run the invariant suite")
    p.set_defaults(handler=cmd_selftest)
    return parser


def _effective_settings(base: Settings, args: argparse.Namespace) -> Settings:
    overrides = {
        "output_format": args.format,
        "prover_depth": args.prover_depth,
        "prover_ms": args.prover_ms,
        "cm_size": args.cm_size,
        "max_size": args.max_size,
        "closure_bound": args.bound,
    }
    overrides = {k: v for k, v in overrides.items() if v is not None}
    if not overrides:
        return base
    return type(base)(**{**base.model_dump(), **overrides})


def main(argv: Optional[Sequence[str]] = None, base: Optional[Settings] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_POSITIVE
    base = base or default_settings
    logging.basicConfig(level=base.log_level, format="%(levelname)s %(name)s: %(message)s")
    fmt = args.format or base.output_format
    out = Report(args.command, fmt)
    try:
        cfg = _effective_settings(base, args)
        code = args.handler(args, cfg, out)
    except (ValueError, OSError) as exc:
        logger.debug("command %s failed", args.command, exc_info=True)
        out.put("error", str(exc), plain=f"error: {exc}")
        code = EXIT_ERROR
    print(out.render())
    return code


if __name__ == "__main__":
    sys.exit(main())
