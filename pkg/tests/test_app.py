"""Tests for the HTTP surface."""

import httpx
import pytest
import pytest_asyncio

from app import VERSION, app
from model import structure_to_text

TEAM = "team D over (x, y) { (0, 0), (1, 1) }"


@pytest_asyncio.fixture
async def client():
    transport = httpx.ASGITransport(app=app)
    async with httpx.AsyncClient(transport=transport, base_url="http://test") as c:
        yield c


@pytest.fixture
def model_text(two_element):
    return structure_to_text(two_element)


@pytest.mark.asyncio
async def test_health(client):
    response = await client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "healthy", "version": VERSION}


@pytest.mark.asyncio
async def test_eval_team(client, model_text):
    """The diagonal team makes y depend on x but not independent of it."""
    response = await client.post("/eval-team", json={"model": model_text, "team": TEAM, "phi": "dep(x, y)"})
    assert response.status_code == 200
    assert response.json()["satisfied"] is True
    response = await client.post("/eval-team", json={"model": model_text, "team": TEAM, "phi": "indep( ; x ; y)"})
    assert response.json()["satisfied"] is False


@pytest.mark.asyncio
async def test_eval_entailment_returns_witness(client, model_text):
    payload = {"model": model_text, "gamma": "x = x", "phi": "(P(x) \\/ ~P(x))"}
    body = (await client.post("/eval-entailment", json=payload)).json()
    assert body["satisfied"] is True
    assert body["witness"].startswith("ES-or")

    payload = {"model": model_text, "gamma": "x = $p", "params": {"$p": "1"}, "phi": "P(x)"}
    body = (await client.post("/eval-entailment", json=payload)).json()
    assert body == {"satisfied": False, "witness": None}


@pytest.mark.asyncio
async def test_check_proof(client, corpus_dir):
    text = (corpus_dir / "proofs" / "fo_lit.proof").read_text()
    response = await client.post("/check-proof", json={"proof": text})
    assert response.status_code == 200
    body = response.json()
    assert body["proof"] == "fo_lit"
    assert body["overall"] == "verified"
    assert body["steps"][0]["status"] == "ok"


@pytest.mark.asyncio
async def test_validate_sequent(client, corpus_dir):
    text = (corpus_dir / "sequents" / "bad.seq").read_text()
    body = (await client.post("/validate-sequent", json={"sequent": text, "max_size": 2})).json()
    assert body["valid"] is False
    assert body["counterexample"].startswith("model ")


@pytest.mark.asyncio
async def test_bad_input_is_a_client_error(client, model_text):
    response = await client.post("/eval-team", json={"model": model_text, "team": TEAM, "phi": "~dep(x)"})
    assert response.status_code == 400
    response = await client.post("/check-proof", json={"proof": "proof p { }"})
    assert response.status_code == 400
    response = await client.post("/validate-sequent", json={"sequent": "", "max_size": 9})
    assert response.status_code == 422
