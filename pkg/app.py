"""
Independence Logic Workbench - HTTP surface

FastAPI application with endpoints for:
- Team semantics on explicit teams
- Entailment semantics with witness trees
- Proof checking
- Empirical sequent validity
"""

import asyncio
import logging
from contextlib import asynccontextmanager
from typing import Dict, List, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from config import settings
from entailment import eval_entailment_witnessed, witness_to_text
from general import parse_theta
from model import parse_structure, parse_teams, structure_to_text
from proof import CheckReport, check_proof, parse_proof, parse_sequents, validate_sequent
from semantics import eval_full
from syntax import parse_fo, parse_il

logger = logging.getLogger(__name__)

VERSION = "1.0.0"


class TeamRequest(BaseModel):
    model: str = Field(description="structure file text")
    team: str = Field(description="team file text holding one team")
    phi: str


class EntailmentRequest(BaseModel):
    model: str
    gamma: str
    params: Dict[str, str] = Field(default_factory=dict)
    phi: str


class ProofRequest(BaseModel):
    proof: str = Field(description="proof file text holding one proof")
    theta: Optional[str] = None


class SequentRequest(BaseModel):
    sequent: str = Field(description="sequent file text holding one sequent")
    max_size: int = Field(default_factory=lambda: settings.max_size, ge=1, le=4)
    theta: Optional[str] = None


class SatisfactionResponse(BaseModel):
    satisfied: bool
    witness: Optional[str] = None


class ProofResponse(BaseModel):
    proof: str
    overall: str
    steps: List[Dict[str, object]]


class SequentResponse(BaseModel):
    valid: bool
    max_size: int
    counterexample: Optional[str] = None
    assignment: Dict[str, str] = Field(default_factory=dict)


@asynccontextmanager
async def lifespan(app: FastAPI):
    logger.info("workbench ready, prover budget %s", settings.prover_budget())
    yield


app = FastAPI(
    title="Independence Logic Workbench",
    description="Team semantics, entailment semantics and a checked sequent calculus for independence logic",
    version=VERSION,
    lifespan=lifespan,
)


def _eval_team(request: TeamRequest) -> SatisfactionResponse:
    M = parse_structure(request.model)
    teams = parse_teams(request.team, M)
    if len(teams) != 1:
        raise ValueError(f"expected exactly one team, found {len(teams)}")
    X = next(iter(teams.values()))
    return SatisfactionResponse(satisfied=eval_full(M, X, parse_il(request.phi, M.signature)))


def _eval_entailment(request: EntailmentRequest) -> SatisfactionResponse:
    M = parse_structure(request.model)
    h = {p.lstrip("$"): e for p, e in request.params.items()}
    witness = eval_entailment_witnessed(
        M, parse_fo(request.gamma, M.signature), h, parse_il(request.phi, M.signature)
    )
    if witness is None:
        return SatisfactionResponse(satisfied=False)
    return SatisfactionResponse(satisfied=True, witness=witness_to_text(witness))


def _check_proof(request: ProofRequest) -> ProofResponse:
    theta = parse_theta(request.theta) if request.theta else None
    report: CheckReport = check_proof(parse_proof(request.proof), theta, settings.prover_budget())
    return ProofResponse(
        proof=report.proof,
        overall=report.overall.value,
        steps=[step.model_dump(mode="json") for step in report.steps],
    )


def _validate_sequent(request: SequentRequest) -> SequentResponse:
    sequents = parse_sequents(request.sequent)
    if len(sequents) != 1:
        raise ValueError(f"expected exactly one sequent, found {len(sequents)}")
    theta = parse_theta(request.theta) if request.theta else None
    verdict = validate_sequent(next(iter(sequents.values())), request.max_size, theta)
    return SequentResponse(
        valid=verdict.valid,
        max_size=verdict.max_size,
        counterexample=structure_to_text(verdict.counterexample) if verdict.counterexample else None,
        assignment=verdict.assignment,
    )


async def _run(operation, request: BaseModel, what: str):
    """Run a CPU-bound operation off the event loop; bad input is a 400."""
    try:
        return await asyncio.to_thread(operation, request)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception:
        logger.exception("%s failed", what)
        raise HTTPException(status_code=500, detail=f"{what} failed")


@app.post("/eval-team", response_model=SatisfactionResponse)
async def eval_team(request: TeamRequest):
    """Team semantics on an explicit team."""
    return await _run(_eval_team, request, "Team evaluation")


@app.post("/eval-entailment", response_model=SatisfactionResponse)
async def eval_entailment(request: EntailmentRequest):
    """Entailment semantics; the witness tree is returned when satisfied."""
    return await _run(_eval_entailment, request, "Entailment evaluation")


@app.post("/check-proof", response_model=ProofResponse)
async def check(request: ProofRequest):
    return await _run(_check_proof, request, "Proof checking")


@app.post("/validate-sequent", response_model=SequentResponse)
async def validate(request: SequentRequest):
    return await _run(_validate_sequent, request, "Sequent validation")


@app.get("/health")
async def health_check():
    """Health check endpoint."""
    return {"status": "healthy", "version": VERSION}


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(app, host="0.0.0.0", port=8000)
