"""Endpoint behavior over the in-process ASGI client."""

import math

import pytest
from fastapi.testclient import TestClient

from conftest import FakeParser
from zberta_sidecar.app import create_app
from zberta_sidecar.errors import InferenceError

MODEL_IDS = {"nli": "tiny-nli", "embed": "tiny-embed", "parser": "fake"}


@pytest.fixture(scope="module")
def client(nli, embedder, fake_parser):
    app = create_app(nli, embedder, fake_parser, model_ids=MODEL_IDS)
    return TestClient(app, raise_server_exceptions=False)


class TestHealthz:
    def test_ok_with_model_ids(self, client):
        response = client.get("/healthz")
        assert response.status_code == 200
        assert response.json() == {"status": "ok", "models": MODEL_IDS}


class TestParseEndpoint:
    def test_tokens_with_lowercased_deprels(self, client):
        response = client.post("/v1/parse", json={"text": "card delivery?"})
        assert response.status_code == 200
        tokens = response.json()["tokens"]
        assert [token["form"] for token in tokens] == ["card", "delivery", "?"]
        # the fake backend emits COMPOUND/ROOT/PUNCT; the boundary lowers them
        assert [token["deprel"] for token in tokens] == ["compound", "root", "punct"]
        assert tokens[0]["head"] == 2
        assert tokens[1]["head"] == 0

    def test_missing_text_rejected(self, client):
        response = client.post("/v1/parse", json={})
        assert response.status_code == 400
        assert "text" in response.json()["error"]

    def test_whitespace_text_rejected(self, client):
        response = client.post("/v1/parse", json={"text": "   "})
        assert response.status_code == 400


class TestNliEndpoint:
    def test_one_judgment_per_hypothesis(self, client):
        response = client.post(
            "/v1/nli",
            json={"premise": "a man is sleeping", "hypotheses": ["a man is awake", "card delivery"]},
        )
        assert response.status_code == 200
        judgments = response.json()["judgments"]
        assert len(judgments) == 2
        for judgment in judgments:
            assert set(judgment) == {"entailment", "neutral", "contradiction"}
            assert abs(math.fsum(judgment.values()) - 1.0) <= 1e-6

    def test_response_order_follows_request_order(self, client):
        hypotheses = ["a man is awake", "card delivery"]
        forward = client.post(
            "/v1/nli", json={"premise": "a man is sleeping", "hypotheses": hypotheses}
        ).json()["judgments"]
        backward = client.post(
            "/v1/nli", json={"premise": "a man is sleeping", "hypotheses": hypotheses[::-1]}
        ).json()["judgments"]
        for a, b in zip(forward, backward[::-1]):
            for label in ("entailment", "neutral", "contradiction"):
                assert abs(a[label] - b[label]) <= 1e-6

    def test_identical_requests_identical_bodies(self, client):
        payload = {"premise": "a man is sleeping", "hypotheses": ["a man is awake"]}
        assert client.post("/v1/nli", json=payload).json() == client.post("/v1/nli", json=payload).json()

    def test_empty_hypotheses_rejected(self, client):
        response = client.post("/v1/nli", json={"premise": "a man is sleeping", "hypotheses": []})
        assert response.status_code == 400
        assert "hypotheses" in response.json()["error"]

    def test_missing_premise_rejected(self, client):
        response = client.post("/v1/nli", json={"hypotheses": ["a man is awake"]})
        assert response.status_code == 400

    def test_blank_premise_rejected(self, client):
        response = client.post("/v1/nli", json={"premise": " ", "hypotheses": ["x"]})
        assert response.status_code == 400

    def test_non_string_hypothesis_rejected(self, client):
        response = client.post("/v1/nli", json={"premise": "p", "hypotheses": ["ok", 3]})
        assert response.status_code == 400

    def test_unparseable_body_rejected(self, client):
        response = client.post(
            "/v1/nli", content=b"nope", headers={"Content-Type": "application/json"}
        )
        assert response.status_code == 400
        assert response.json()["error"].startswith("malformed request")


class TestEmbedEndpoint:
    def test_one_vector_per_text(self, client):
        response = client.post("/v1/embed", json={"texts": ["card delivery", "exchange rate"]})
        assert response.status_code == 200
        vectors = response.json()["vectors"]
        assert len(vectors) == 2
        assert len(vectors[0]) == len(vectors[1])
        for vector in vectors:
            norm = math.fsum(value * value for value in vector) ** 0.5
            assert abs(norm - 1.0) <= 1e-6

    def test_equal_texts_equal_vectors(self, client):
        vectors = client.post("/v1/embed", json={"texts": ["x", "x"]}).json()["vectors"]
        assert vectors[0] == vectors[1]

    def test_empty_texts_rejected(self, client):
        response = client.post("/v1/embed", json={"texts": []})
        assert response.status_code == 400

    def test_non_list_texts_rejected(self, client):
        response = client.post("/v1/embed", json={"texts": "card delivery"})
        assert response.status_code == 400

    def test_non_string_entry_rejected(self, client):
        response = client.post("/v1/embed", json={"texts": ["ok", None]})
        assert response.status_code == 400


class _BrokenEmbedder:
    def embed(self, texts):
        raise InferenceError("embedding collapsed to the zero vector")


class TestBackendFailure:
    def test_backend_error_maps_to_500(self, nli, fake_parser):
        app = create_app(nli, _BrokenEmbedder(), fake_parser)
        client = TestClient(app, raise_server_exceptions=False)
        response = client.post("/v1/embed", json={"texts": ["x"]})
        assert response.status_code == 500
        assert "collapsed" in response.json()["error"]
