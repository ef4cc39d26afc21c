"""HTTP triage service: intent discovery with a low-confidence signal.

POST /v1/discover runs the full pipeline on one utterance and flags the
response with low_confidence when the top score falls under the configured
floor, so callers can route those utterances to a human or a heavier
system. GET /healthz reports dependency status.
"""

from __future__ import annotations

import requests as _requests
from fastapi import Body, FastAPI
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from .conllu import ConlluParseError
from .errors import (
    ClassificationError,
    InputError,
    ProtocolError,
    TransportError,
    TreeValidationError,
)
from .pipeline import Pipeline

_PROBE_TIMEOUT = 5.0


def _error(status: int, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": message})


def _probe(endpoint: str) -> str:
    try:
        response = _requests.get(endpoint.rstrip("/") + "/healthz", timeout=_PROBE_TIMEOUT)
    except _requests.RequestException:
        return "unreachable"
    return "ok" if response.status_code == 200 else f"status {response.status_code}"


def dependency_status(pipeline: Pipeline) -> dict:
    config = pipeline.config
    status = {}
    for name, mode, endpoint in (
        ("parser", config.parser, config.parser_endpoint),
        ("scorer", config.scorer, config.scorer_endpoint),
        ("embedder", config.embedder, config.embedder_endpoint),
    ):
        if mode == "remote":
            status[name] = {"mode": mode, "endpoint": endpoint, "status": _probe(endpoint)}
        else:
            status[name] = {"mode": mode, "status": "ok"}
    return status


def create_app(pipeline: Pipeline) -> FastAPI:
    app = FastAPI(title="zberta intent discovery", docs_url=None, redoc_url=None)

    @app.exception_handler(RequestValidationError)
    async def malformed_request(request, exc):
        return _error(400, f"malformed request: {exc.errors()[0].get('msg', 'invalid body')}")

    @app.get("/healthz")
    def healthz():
        return {"status": "ok", "dependencies": dependency_status(pipeline)}

    @app.post("/v1/discover")
    def discover(payload: dict = Body(...)):
        utterance = payload.get("utterance")
        if not isinstance(utterance, str) or not utterance.strip():
            return _error(400, "field 'utterance' must be a non-empty string")
        conllu_text = payload.get("conllu")
        if conllu_text is not None and not isinstance(conllu_text, str):
            return _error(400, "field 'conllu' must be a string when present")
        try:
            prediction = pipeline.discover(utterance, conllu_text)
        except (InputError, ConlluParseError, TreeValidationError) as exc:
            return _error(400, str(exc))
        except (TransportError, ProtocolError, ClassificationError) as exc:
            return _error(502, str(exc))
        record = prediction.to_record()
        record["low_confidence"] = prediction.top_score < pipeline.config.confidence_floor
        return record

    return app
