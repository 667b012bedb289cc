"""
Invariant self-test suite for the independence logic workbench.

Each check compares two independent routes to the same answer on seeded
random or exhaustive inputs and counts disagreements.  A check passes with
no violations inside its time ceiling.
"""

import itertools
import logging
import random
import time
from enum import Enum
from pathlib import Path
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from pydantic import BaseModel, Field

from entailment import check_witness, eval_entailment, eval_entailment_witnessed
from general import (
    GeneralModel,
    Theta,
    check_general_closure,
    check_theta_closed,
    least_family,
    parse_theta,
    verify_least_collapse,
)
from model import Structure, Team, all_teams, enumerate_structures, parse_teams, team_of_definition, team_restrict
from proof import (
    Overall,
    Proof,
    ProofStep,
    Sequent,
    check_proof,
    derive_dep,
    derive_fo,
    holds_in_general_model,
    parse_proofs,
    sequent_signature,
    validate_sequent,
)
from semantics import TeamEvaluator, eval_full, eval_gts, functional_dependency_holds, sat_independence_atom
from syntax import (
    Dep,
    Equal,
    IlFormula,
    Literal,
    Signature,
    TeamVar,
    TermTuple,
    all_team_var_names,
    free_vars,
    parse_fo,
    to_text,
)

from .generators import (
    VARIABLES,
    all_domains,
    exhaustive_pool,
    first_order_pool,
    grammar_sample,
    random_family,
    random_fo,
    random_fo_il,
    random_il,
    random_structure,
    random_team,
    random_tuple,
)

logger = logging.getLogger(__name__)

# The exhaustive formula sample only mentions P.
EXHAUSTIVE_SIGNATURE = Signature(relations={"P": 1})
CLOSURE_BOUND = 2
MUTATIONS = 20


class InvariantKind(str, Enum):
    """Properties the workbench must satisfy."""
    INDEPENDENCE_ORACLE = "independence-oracle"
    LOCALITY = "locality"
    REFINEMENT = "refinement"
    FLATNESS = "flatness"
    INTERSECTION_CLOSURE = "intersection-closure"
    ENTAILMENT_AGREEMENT = "entailment-agreement"
    PARAMETER_IRRELEVANCE = "parameter-irrelevance"
    SOUNDNESS = "soundness"
    DERIVED_RULES = "derived-rules"
    DEP_SUGAR = "dep-sugar"
    LEAST_COLLAPSE = "least-collapse"
    EMPTY_TEAM = "empty-team"


SLOW_CHECKS = frozenset({
    InvariantKind.LOCALITY,
    InvariantKind.LEAST_COLLAPSE,
    InvariantKind.SOUNDNESS,
    InvariantKind.DERIVED_RULES,
})


class InvariantResult(BaseModel):
    """Outcome of one check."""
    kind: InvariantKind
    cases: int = Field(ge=0)
    violations: int = Field(ge=0)
    elapsed_ms: int = Field(ge=0)
    counterexample: Optional[str] = None
    passed: bool = False


class SelfTestThresholds(BaseModel):
    """Pass criteria."""
    max_violations: int = 0
    max_ms: int = 60_000
    slow_max_ms: int = 3_600_000  # exhaustive enumerations and checks that call the prover

    def ceiling(self, kind: InvariantKind) -> int:
        if kind in SLOW_CHECKS:
            return self.slow_max_ms
        return self.max_ms


Case = Tuple[bool, str]


def independence_oracle(X: Team, t1: TermTuple, t2: TermTuple, t3: TermTuple) -> bool:
    """The interpolation condition read literally, with a loop over three rows."""
    rows = [dict(zip(X.variables, r)) for r in X.rows]

    def val(s: Dict[str, str], terms: TermTuple) -> Tuple[str, ...]:
        return tuple(s[t.name] for t in terms)

    for s in rows:
        for s2 in rows:
            if val(s, t1) != val(s2, t1):
                continue
            if not any(
                val(s3, t1 + t2) == val(s, t1 + t2) and val(s3, t1 + t3) == val(s2, t1 + t3)
                for s3 in rows
            ):
                return False
    return True


def mutate_step(proof: Proof, rng: random.Random) -> Proof:
    """Corrupt one step so that its check must fail.

    Either the stated ``phi`` is replaced by a literal no rule produces there,
    or a premise points at the step itself.
    """
    position = rng.randrange(len(proof.steps))
    step = proof.steps[position]
    if step.premises and rng.random() < 0.5:
        bad = ProofStep(
            step.index, step.rule, step.sequent, (step.index,) + step.premises[1:],
            step.var, step.param, step.theta_index, step.relations,
        )
    else:
        marker = TeamVar("mutated")
        s = step.sequent
        bad = ProofStep(
            step.index, step.rule, Sequent(s.ctx, s.gamma, Literal(False, Equal(marker, marker))),
            step.premises, step.var, step.param, step.theta_index, step.relations,
        )
    steps = list(proof.steps)
    steps[position] = bad
    return Proof(f"{proof.name}-mutated", tuple(steps))


def close_family(M: Structure, teams: Iterable[Team], var_universe: Iterable[str], bound: int) -> FrozenSet[Team]:
    """Add missing definable teams to ``teams`` until the closure search up to ``bound`` finds none."""
    family = set(teams)
    while True:
        G = GeneralModel.from_teams(M, family)
        verdict = check_general_closure(G, var_universe, bound)
        if verdict.closed:
            return G.teams
        family.add(parse_teams(verdict.team, M)["missing"])


class SelfTestSuite:
    """Runs every invariant check with the configured sample count and seed.

    Random checks draw ``selftest_samples`` cases (the independence oracle and
    dep sugar twice as many).  Locality, the empty team, least model collapse
    and the derived rules enumerate every case up to the configured formula
    size and team domain instead.
    """

    def __init__(self, settings, thresholds: Optional[SelfTestThresholds] = None):
        self.settings = settings
        self.thresholds = thresholds or SelfTestThresholds()
        self.samples = settings.selftest_samples
        self.seed = settings.selftest_seed

    def rng(self, kind: InvariantKind) -> random.Random:
        return random.Random(f"{self.seed}:{kind.value}")

    def checks(self) -> Dict[InvariantKind, Callable[[random.Random], Iterator[Case]]]:
        return {
            InvariantKind.INDEPENDENCE_ORACLE: self.check_independence_oracle,
            InvariantKind.LOCALITY: self.check_locality,
            InvariantKind.REFINEMENT: self.check_refinement,
            InvariantKind.FLATNESS: self.check_flatness,
            InvariantKind.INTERSECTION_CLOSURE: self.check_intersection_closure,
            InvariantKind.ENTAILMENT_AGREEMENT: self.check_entailment_agreement,
            InvariantKind.PARAMETER_IRRELEVANCE: self.check_parameter_irrelevance,
            InvariantKind.SOUNDNESS: self.check_soundness,
            InvariantKind.DERIVED_RULES: self.check_derived_rules,
            InvariantKind.DEP_SUGAR: self.check_dep_sugar,
            InvariantKind.LEAST_COLLAPSE: self.check_least_collapse,
            InvariantKind.EMPTY_TEAM: self.check_empty_team,
        }

    def run(self, kind: InvariantKind) -> InvariantResult:
        start = time.monotonic()
        cases = violations = 0
        first: Optional[str] = None
        for ok, description in self.checks()[kind](self.rng(kind)):
            cases += 1
            if not ok:
                violations += 1
                first = first or description
        elapsed = int((time.monotonic() - start) * 1000)
        passed = violations <= self.thresholds.max_violations and elapsed <= self.thresholds.ceiling(kind)
        if not passed:
            logger.warning("%s: %d violations in %d cases (%d ms)", kind.value, violations, cases, elapsed)
        return InvariantResult(
            kind=kind, cases=cases, violations=violations, elapsed_ms=elapsed,
            counterexample=first, passed=passed,
        )

    def run_all(self) -> List[InvariantResult]:
        return [self.run(kind) for kind in InvariantKind]

    # -- exhaustive inputs

    def exhaustive_sample(self) -> List[IlFormula]:
        """Every formula up to the configured size over ``exhaustive_pool``, quantifying ``y``."""
        return grammar_sample(max_size=self.settings.selftest_formula_size, pool=exhaustive_pool(), quantified=("y",))

    def small_structures(self) -> Iterator[Structure]:
        for size in (1, 2):
            yield from enumerate_structures(EXHAUSTIVE_SIGNATURE, size)

    def team_domains(self) -> List[Tuple[str, ...]]:
        return all_domains(VARIABLES[: self.settings.selftest_team_vars])

    # -- team semantics

    def check_independence_oracle(self, rng: random.Random) -> Iterator[Case]:
        for _ in range(self.samples * 2):
            M = random_structure(rng, max_size=4)
            variables = rng.sample(["x", "y", "z"], rng.randint(1, 3))
            X = random_team(rng, M, variables, max_rows=8)
            t1 = random_tuple(rng, variables)
            t2 = random_tuple(rng, variables) or random_tuple(rng, variables, 1)
            t3 = random_tuple(rng, variables)
            ok = sat_independence_atom(M, X, t1, t2, t3) == independence_oracle(X, t1, t2, t3)
            yield ok, f"{X} with ({t1}; {t2}; {t3})"

    def check_locality(self, rng: random.Random) -> Iterator[Case]:
        sample = self.exhaustive_sample()
        for M in self.small_structures():
            for variables in self.team_domains():
                for X in all_teams(M, variables):
                    evaluator = TeamEvaluator(M)
                    for phi in sample:
                        free = free_vars(phi).team
                        if not free <= X.domain:
                            continue
                        restricted = team_restrict(X, free)
                        ok = evaluator.sat(X, phi) == evaluator.sat(restricted, phi)
                        yield ok, f"{to_text(phi)} on {X} in {M.name}"

    def check_refinement(self, rng: random.Random) -> Iterator[Case]:
        sample = grammar_sample(max_size=2)
        for _ in range(self.samples):
            M = random_structure(rng, size=2)
            small = random_family(rng, M, ["x", "y"], 6)
            large = set(small) | set(random_family(rng, M, ["x", "y"], 6))
            X = rng.choice(small)
            phi = rng.choice([p for p in sample if free_vars(p).team <= X.domain])
            ok = not eval_gts(M, small, X, phi) or eval_gts(M, large, X, phi)
            yield ok, f"{to_text(phi)} on {X}"

    def check_flatness(self, rng: random.Random) -> Iterator[Case]:
        for _ in range(self.samples):
            M = random_structure(rng, max_size=3)
            X = random_team(rng, M, ["x", "y"], max_rows=6)
            phi = random_fo_il(rng, ["x", "y"], 2)
            rows_each = all(eval_full(M, Team(X.variables, frozenset({row})), phi) for row in X.rows)
            yield eval_full(M, X, phi) == rows_each, f"{to_text(phi)} on {X}"

    def check_intersection_closure(self, rng: random.Random) -> Iterator[Case]:
        universe = ("x", "y")
        for _ in range(max(1, self.samples // 50)):
            M = random_structure(rng, size=2)
            first = close_family(M, random_family(rng, M, universe, 3), universe, CLOSURE_BOUND)
            second = close_family(M, random_family(rng, M, universe, 3), universe, CLOSURE_BOUND)
            meet = GeneralModel.from_teams(M, first & second)
            verdict = check_general_closure(meet, universe, CLOSURE_BOUND)
            yield verdict.closed, f"{len(first & second)} common teams miss {verdict.team} ({verdict.formula})"

    def check_dep_sugar(self, rng: random.Random) -> Iterator[Case]:
        for _ in range(self.samples * 2):
            M = random_structure(rng, max_size=3)
            variables = rng.sample(["x", "y", "z"], rng.randint(1, 3))
            X = random_team(rng, M, variables, max_rows=8)
            determinants = random_tuple(rng, variables)
            dependent = TeamVar(rng.choice(variables))
            atom = Dep(determinants + (dependent,))
            ok = eval_full(M, X, atom) == functional_dependency_holds(M, X, determinants, dependent)
            yield ok, f"{to_text(atom)} on {X}"

    def check_empty_team(self, rng: random.Random) -> Iterator[Case]:
        sample = self.exhaustive_sample()
        for M in self.small_structures():
            evaluator = TeamEvaluator(M)
            for variables in self.team_domains():
                empty = Team.empty(variables)
                for phi in sample:
                    if free_vars(phi).team <= empty.domain:
                        yield evaluator.sat(empty, phi), f"{to_text(phi)} over {variables} in {M.name}"

    def check_least_collapse(self, rng: random.Random) -> Iterator[Case]:
        sample = self.exhaustive_sample()
        universe = ("x", "y")
        for M in self.small_structures():
            failures = verify_least_collapse(M, universe)
            yield not failures, f"{len(failures)} teams of {M.name} not defined by their diagrams"
            family = least_family(M, universe)
            general, full = TeamEvaluator(M, family), TeamEvaluator(M)
            for X in sorted(family, key=lambda T: (T.variables, T.sorted_rows(M.index))):
                for phi in sample:
                    if free_vars(phi).team <= X.domain:
                        yield general.sat(X, phi) == full.sat(X, phi), f"{to_text(phi)} on {X} in {M.name}"

    # -- entailment semantics

    def _entailment_case(self, rng: random.Random) -> Tuple[Structure, object, Dict[str, str], object]:
        M = random_structure(rng, max_size=3)
        variables = rng.sample(["x", "y"], rng.randint(1, 2))
        gamma = random_fo(rng, variables, 2, params=["p"])
        phi = random_il(rng, variables, 2)
        return M, gamma, {"p": rng.choice(M.domain)}, phi

    def check_entailment_agreement(self, rng: random.Random) -> Iterator[Case]:
        for _ in range(self.samples):
            M, gamma, h, phi = self._entailment_case(rng)
            domain = sorted(free_vars(gamma).team | free_vars(phi).team)
            X = team_of_definition(M, gamma, h, domain)
            verdict = eval_entailment(M, gamma, h, phi)
            witness = eval_entailment_witnessed(M, gamma, h, phi)
            ok = verdict == eval_full(M, X, phi) and (witness is not None) == verdict
            if witness is not None:
                ok = ok and check_witness(M, gamma, h, phi, witness)
            yield ok, f"{to_text(gamma)} with {h} against {to_text(phi)}"

    def check_parameter_irrelevance(self, rng: random.Random) -> Iterator[Case]:
        for _ in range(self.samples):
            M, gamma, h, phi = self._entailment_case(rng)
            extended = {**h, "unused": rng.choice(M.domain)}
            ok = eval_entailment(M, gamma, h, phi) == eval_entailment(M, gamma, extended, phi)
            yield ok, f"{to_text(gamma)} against {to_text(phi)}"

    # -- proofs

    def corpus(self) -> List[Tuple[Proof, Optional[Theta]]]:
        """Every bundled proof with the theory of the same file stem, if any."""
        root = Path(self.settings.corpus_dir)
        out: List[Tuple[Proof, Optional[Theta]]] = []
        for path in sorted((root / "proofs").glob("*.proof")):
            theory = root / "theta" / f"{path.stem}.theta"
            theta = parse_theta(theory) if theory.exists() else None
            out.extend((proof, theta) for proof in parse_proofs(path))
        return out

    def check_soundness(self, rng: random.Random) -> Iterator[Case]:
        budget = self.settings.prover_budget()
        corpus = self.corpus()
        for proof, theta in corpus:
            report = check_proof(proof, theta, budget)
            if report.overall != Overall.VERIFIED:
                failure = report.first_failure()
                yield False, f"{proof.name}: {report.overall.value} {failure.reason if failure else ''}"
                continue
            verdict = validate_sequent(proof.conclusion, self.settings.max_size, theta)
            yield verdict.valid, f"{proof.name}: conclusion fails in {verdict.counterexample}"
            if theta is not None:
                yield self._theta_models_agree(proof.conclusion, theta), f"{proof.name}: fails in a closed general model"
        for _ in range(MUTATIONS if corpus else 0):
            proof, theta = rng.choice(corpus)
            mutated = mutate_step(proof, rng)
            report = check_proof(mutated, theta, budget)
            yield report.overall == Overall.REJECTED, f"mutation of {proof.name} was not rejected"

    def _theta_models_agree(self, s: Sequent, theta: Theta) -> bool:
        """The conclusion holds in every closed explicit general model of size at most two.

        Over a finite structure every team on the variable universe is
        definable, so the only explicit family over that universe closed
        under definability is ``least_family``.
        """
        sig = sequent_signature(s)
        universe = sorted(all_team_var_names(s.gamma) | all_team_var_names(s.phi))
        for size in (1, 2):
            for M in enumerate_structures(sig, size):
                G = GeneralModel.from_teams(M, least_family(M, universe))
                if check_theta_closed(G, theta).closed and not holds_in_general_model(G, s, universe):
                    return False
        return True

    def check_derived_rules(self, rng: random.Random) -> Iterator[Case]:
        budget = self.settings.prover_budget()
        gamma = parse_fo("R(x, y)")
        sample = grammar_sample(
            max_size=self.settings.selftest_formula_size + 1, pool=first_order_pool(), quantified=("y",),
        )
        for phi in sample:
            report = check_proof(derive_fo(gamma, phi), None, budget)
            yield report.verified, f"derive_fo {to_text(gamma)} / {to_text(phi)}: {report.overall.value}"
        terms = (TeamVar("x"), TeamVar("y"), TeamVar("z"))
        gamma = parse_fo("R(x, y) & P(z)")
        for k in range(3):
            for determinants in itertools.product(terms, repeat=k):
                for target in terms:
                    report = check_proof(derive_dep(gamma, determinants, target), None, budget)
                    yield report.verified, f"derive_dep {determinants} -> {target}: {report.overall.value}"
