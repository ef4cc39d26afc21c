"""HTTP wire protocols for the parser, NLI scorer, and embedder backends.

Three tiny JSON-over-POST protocols share the same conventions: UTF-8
bodies, non-200 statuses are transport errors, and every response is
validated structurally before anything downstream sees it. The decoders
are usable standalone so alternative backends can be conformance-tested.
"""

from __future__ import annotations

import requests

from .conllu import SOURCE_REMOTE, ParsedUtterance, Token
from .errors import InputError, ProtocolError, TransportError, TreeValidationError
from .evaluation import EmbeddingVector
from .nli import EntailmentJudgment

PARSE_PATH = "/v1/parse"
NLI_PATH = "/v1/nli"
EMBED_PATH = "/v1/embed"

DEFAULT_TIMEOUT = 30.0

_NLI_SUM_TOLERANCE = 1e-6


def post_json(endpoint: str, path: str, payload: dict, timeout: float = DEFAULT_TIMEOUT) -> dict:
    """POST ``payload`` to endpoint+path and return the decoded JSON body."""
    url = endpoint.rstrip("/") + path
    try:
        response = requests.post(url, json=payload, timeout=timeout)
    except requests.RequestException as exc:
        raise TransportError(f"request to {url} failed: {exc}") from exc
    if response.status_code != 200:
        raise TransportError(f"{url} returned status {response.status_code}")
    try:
        body = response.json()
    except ValueError as exc:
        raise ProtocolError(f"{url} returned a non-JSON body") from exc
    if not isinstance(body, dict):
        raise ProtocolError(f"{url} returned {type(body).__name__}, expected an object")
    return body


def _require_list(body: dict, key: str) -> list:
    value = body.get(key)
    if not isinstance(value, list):
        raise ProtocolError(f"response is missing a {key!r} list")
    return value


def decode_parse_response(body: dict, text: str) -> ParsedUtterance:
    """Validate a parser response into a ParsedUtterance (source: remote)."""
    tokens = []
    for i, entry in enumerate(_require_list(body, "tokens")):
        if not isinstance(entry, dict):
            raise ProtocolError(f"token {i} is not an object")
        try:
            index = entry["index"]
            form = entry["form"]
            upos = entry["upos"]
            head = entry["head"]
            deprel = entry["deprel"]
        except KeyError as exc:
            raise ProtocolError(f"token {i} is missing field {exc.args[0]!r}") from exc
        if not isinstance(index, int) or not isinstance(head, int) or isinstance(index, bool) or isinstance(head, bool):
            raise ProtocolError(f"token {i} has non-integer index or head")
        if not all(isinstance(v, str) for v in (form, upos, deprel)):
            raise ProtocolError(f"token {i} has non-string form, upos, or deprel")
        try:
            tokens.append(Token(index, form, upos, head, deprel))
        except TreeValidationError as exc:
            raise ProtocolError(f"token {i} invalid: {exc}") from exc
    try:
        return ParsedUtterance(text, tuple(tokens), source=SOURCE_REMOTE)
    except TreeValidationError as exc:
        raise ProtocolError(f"parse violates tree invariants: {exc}") from exc


def decode_nli_response(body: dict, expected: int) -> list[EntailmentJudgment]:
    """Validate an NLI response; distributions off by more than 1e-6 are rejected."""
    entries = _require_list(body, "judgments")
    if len(entries) != expected:
        raise ProtocolError(f"expected {expected} judgments, got {len(entries)}")
    judgments = []
    for i, entry in enumerate(entries):
        if not isinstance(entry, dict):
            raise ProtocolError(f"judgment {i} is not an object")
        probabilities = []
        for key in ("entailment", "neutral", "contradiction"):
            value = entry.get(key)
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise ProtocolError(f"judgment {i} field {key!r} is not a number")
            if not 0.0 <= value <= 1.0:
                raise ProtocolError(f"judgment {i} field {key!r} out of [0, 1]: {value}")
            probabilities.append(float(value))
        total = sum(probabilities)
        if abs(total - 1.0) > _NLI_SUM_TOLERANCE:
            raise ProtocolError(f"judgment {i} probabilities sum to {total}, not 1")
        # renormalize the residual drift so the strict distribution invariant holds
        judgments.append(EntailmentJudgment(*(p / total for p in probabilities)))
    return judgments


def decode_embed_response(body: dict, expected: int) -> list[EmbeddingVector]:
    """Validate an embedding response: rectangular, numeric, no all-zero rows."""
    rows = _require_list(body, "vectors")
    if len(rows) != expected:
        raise ProtocolError(f"expected {expected} vectors, got {len(rows)}")
    vectors = []
    width = None
    for i, row in enumerate(rows):
        if not isinstance(row, list) or not row:
            raise ProtocolError(f"vector {i} is not a non-empty list")
        if any(not isinstance(v, (int, float)) or isinstance(v, bool) for v in row):
            raise ProtocolError(f"vector {i} has non-numeric entries")
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ProtocolError(
                f"ragged embedding matrix: vector {i} has length {len(row)}, expected {width}"
            )
        if all(v == 0 for v in row):
            raise ProtocolError(f"vector {i} is all-zero")
        vectors.append(EmbeddingVector(tuple(float(v) for v in row)))
    return vectors


def parse_remote(utterance: str, endpoint: str, timeout: float = DEFAULT_TIMEOUT) -> ParsedUtterance:
    """Fetch a dependency parse for ``utterance`` from a remote parser."""
    if not utterance.strip():
        raise InputError("cannot parse an empty utterance")
    body = post_json(endpoint, PARSE_PATH, {"text": utterance}, timeout)
    return decode_parse_response(body, utterance)


class RemoteScorer:
    """NLI scorer backed by a remote /v1/nli endpoint."""

    def __init__(self, endpoint: str, timeout: float = DEFAULT_TIMEOUT):
        self.endpoint = endpoint
        self.timeout = timeout

    def score(self, premise: str, hypotheses: list[str]) -> list[EntailmentJudgment]:
        if not hypotheses:
            raise InputError("cannot score an empty hypothesis list")
        body = post_json(
            self.endpoint, NLI_PATH, {"premise": premise, "hypotheses": list(hypotheses)},
            self.timeout,
        )
        return decode_nli_response(body, len(hypotheses))


class RemoteEmbedder:
    """Sentence embedder backed by a remote /v1/embed endpoint."""

    def __init__(self, endpoint: str, timeout: float = DEFAULT_TIMEOUT):
        self.endpoint = endpoint
        self.timeout = timeout

    def embed_many(self, texts: list[str]) -> list[EmbeddingVector]:
        if not texts:
            raise InputError("cannot embed an empty text list")
        if any(not text for text in texts):
            raise InputError("cannot embed empty text")
        body = post_json(self.endpoint, EMBED_PATH, {"texts": list(texts)}, self.timeout)
        return decode_embed_response(body, len(texts))

    def embed(self, text: str) -> EmbeddingVector:
        return self.embed_many([text])[0]
