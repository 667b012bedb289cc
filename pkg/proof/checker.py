"""Step-by-step proof checking."""

import logging
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field

from general import Theta
from prover import DEFAULT_BUDGET, Budget, prove_entailment
from syntax import Indep, desugar_dep, to_text

from .rules import apply_rule, axiom_ind, axiom_lit
from .sequents import Derivation, Proof, ProofStep, RuleTag, Sequent

logger = logging.getLogger(__name__)


class StepStatus(str, Enum):
    OK = "ok"
    FAILED = "failed"
    CONDITIONAL = "conditional"


class Overall(str, Enum):
    VERIFIED = "verified"
    CONDITIONALLY_VERIFIED = "conditionally-verified"
    REJECTED = "rejected"


class StepResult(BaseModel):
    index: int
    rule: str
    status: StepStatus
    reason: str = ""


class CheckReport(BaseModel):
    proof: str
    steps: List[StepResult] = Field(default_factory=list)

    @property
    def overall(self) -> Overall:
        statuses = {s.status for s in self.steps}
        if not self.steps or StepStatus.FAILED in statuses:
            return Overall.REJECTED
        if StepStatus.CONDITIONAL in statuses:
            return Overall.CONDITIONALLY_VERIFIED
        return Overall.VERIFIED

    @property
    def verified(self) -> bool:
        return self.overall == Overall.VERIFIED

    def first_failure(self) -> Optional[StepResult]:
        return next((s for s in self.steps if s.status == StepStatus.FAILED), None)


def _expected(step: ProofStep, proof: Proof, theta: Optional[Theta]) -> Derivation:
    stated = step.sequent
    if step.rule == RuleTag.LIT:
        return Derivation(axiom_lit(stated.gamma, stated.phi))
    if step.rule == RuleTag.IND:
        atom = desugar_dep(stated.phi)
        if not isinstance(atom, Indep):
            raise ValueError(f"PS-ind concludes an independence atom, not {to_text(stated.phi)}")
        return Derivation(axiom_ind(stated.gamma, atom.first, atom.second, atom.third))
    premises: List[Sequent] = []
    for i in step.premises:
        if not 1 <= i < step.index:
            raise ValueError(f"premise {i} is not an earlier step")
        premises.append(proof.steps[i - 1].sequent)
    return apply_rule(
        step.rule,
        premises,
        gamma=stated.gamma,
        var=step.var,
        param=step.param,
        ctx=stated.ctx,
        theta=theta,
        theta_index=step.theta_index,
        relations=step.relations,
    )


def _difference(expected: Sequent, stated: Sequent) -> str:
    if expected.ctx != stated.ctx:
        missing = sorted(to_text(c) for c in expected.ctx - stated.ctx)
        extra = sorted(to_text(c) for c in stated.ctx - expected.ctx)
        return f"context differs: expected {missing} but found {extra}"
    if expected.gamma != stated.gamma:
        return f"gamma should be {to_text(expected.gamma)}"
    return f"phi should be {to_text(expected.phi)}"


def check_step(step: ProofStep, proof: Proof, theta: Optional[Theta], budget: Budget) -> StepResult:
    def result(status: StepStatus, reason: str = "") -> StepResult:
        return StepResult(index=step.index, rule=step.rule.value, status=status, reason=reason)

    if step.rule.is_axiom and step.premises:
        return result(StepStatus.FAILED, f"{step.rule.value} is an axiom and takes no premises")
    try:
        derived = _expected(step, proof, theta)
    except ValueError as exc:
        return result(StepStatus.FAILED, str(exc))
    if not derived.sequent.same_as(step.sequent):
        return result(StepStatus.FAILED, _difference(derived.sequent, step.sequent))
    if derived.obligation is None:
        return result(StepStatus.OK)

    obligation = derived.obligation
    verdict = prove_entailment(obligation.premises, obligation.goals, budget)
    if verdict.is_proved:
        return result(StepStatus.OK)
    if verdict.is_refuted:
        M = verdict.countermodel
        return result(
            StepStatus.FAILED,
            f"entailment {obligation} fails in a structure of size {M.size} under {verdict.assignment}",
        )
    return result(StepStatus.CONDITIONAL, f"unresolved entailment {obligation} ({verdict.reason})")


def check_proof(proof: Proof, theta: Optional[Theta] = None, budget: Budget = DEFAULT_BUDGET) -> CheckReport:
    """Re-derive every step from the steps it cites and compare.

    Problems never raise; each lands in the report as a failed step.  PS-ent
    obligations go to the prover: proved is OK, refuted fails the step and
    an open verdict makes it conditional.
    """
    report = CheckReport(proof=proof.name)
    for position, step in enumerate(proof.steps, start=1):
        if step.index != position:
            report.steps.append(StepResult(
                index=step.index, rule=step.rule.value, status=StepStatus.FAILED,
                reason=f"step numbered {step.index} stands at position {position}",
            ))
            continue
        report.steps.append(check_step(step, proof, theta, budget))
    logger.info("proof %s: %s", proof.name, report.overall.value)
    return report
