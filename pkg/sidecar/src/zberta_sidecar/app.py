"""HTTP surface: the three wire protocols plus a health endpoint.

Payload validation lives here; the backends assume well-formed input.
Malformed requests come back as 400 with an {"error": ...} body, model
failures as 500, matching what the pipeline's wire clients expect.
"""

from __future__ import annotations

from fastapi import Body, FastAPI
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from .errors import SidecarError


def _error(status: int, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": message})


def _string_list(payload: dict, key: str) -> list[str] | JSONResponse:
    values = payload.get(key)
    if not isinstance(values, list) or not values:
        return _error(400, f"field {key!r} must be a non-empty list")
    if any(not isinstance(value, str) for value in values):
        return _error(400, f"field {key!r} must contain only strings")
    return values


def create_app(nli, embedder, parser, model_ids: dict[str, str] | None = None) -> FastAPI:
    app = FastAPI(title="zberta model sidecar", docs_url=None, redoc_url=None)

    @app.exception_handler(RequestValidationError)
    async def malformed_request(request, exc):
        return _error(400, f"malformed request: {exc.errors()[0].get('msg', 'invalid body')}")

    @app.exception_handler(SidecarError)
    async def backend_failure(request, exc):
        return _error(500, str(exc))

    @app.get("/healthz")
    def healthz():
        return {"status": "ok", "models": model_ids or {}}

    @app.post("/v1/parse")
    def parse(payload: dict = Body(...)):
        text = payload.get("text")
        if not isinstance(text, str) or not text.strip():
            return _error(400, "field 'text' must be a non-empty string")
        tokens = parser.parse(text)
        for token in tokens:
            token["deprel"] = token["deprel"].lower()
        return {"tokens": tokens}

    @app.post("/v1/nli")
    def nli_endpoint(payload: dict = Body(...)):
        premise = payload.get("premise")
        if not isinstance(premise, str) or not premise.strip():
            return _error(400, "field 'premise' must be a non-empty string")
        hypotheses = _string_list(payload, "hypotheses")
        if isinstance(hypotheses, JSONResponse):
            return hypotheses
        return {"judgments": nli.judge(premise, hypotheses)}

    @app.post("/v1/embed")
    def embed(payload: dict = Body(...)):
        texts = _string_list(payload, "texts")
        if isinstance(texts, JSONResponse):
            return texts
        return {"vectors": embedder.embed(texts)}

    return app
