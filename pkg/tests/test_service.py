"""HTTP service tests over an in-process ASGI client.

The triage contract matters most here: responses carry low_confidence
exactly when the top renormalized score falls under the configured floor.
"""

import pytest
from fastapi.testclient import TestClient

from intent_fixtures import ALGORITHM_FIXTURES, conllu_block
from zberta.config import make_config
from zberta.pipeline import Pipeline
from zberta.service import create_app, dependency_status


def block_for(name: str) -> str:
    rows, _ = ALGORITHM_FIXTURES[name]
    return conllu_block(rows, text=name)


def make_client(**overrides) -> TestClient:
    overrides.setdefault("wordnet_dir", "bundled")
    pipeline = Pipeline(make_config(None, **overrides))
    return TestClient(create_app(pipeline), raise_server_exceptions=False)


@pytest.fixture(scope="module")
def client():
    return make_client()


class TestDiscoverEndpoint:
    def test_happy_path_with_bundled_parse(self, client):
        response = client.post(
            "/v1/discover",
            json={
                "utterance": "I want to track my delivery",
                "conllu": block_for("I want to track my delivery"),
            },
        )
        assert response.status_code == 200
        body = response.json()
        assert body["utterance"] == "I want to track my delivery"
        assert body["chosen"] == "track-delivery"
        assert body["ranked"] == [{"intent": "track-delivery", "score": 1.0}]
        assert body["low_confidence"] is False

    def test_identical_requests_identical_responses(self, client):
        payload = {
            "utterance": "track card delivery",
            "conllu": block_for("track card delivery"),
        }
        first = client.post("/v1/discover", json=payload)
        second = client.post("/v1/discover", json=payload)
        assert first.status_code == second.status_code == 200
        assert first.json() == second.json()

    def test_three_way_tie_flags_low_confidence(self, client):
        # every candidate overlaps the premise fully, so each scores 1/3
        response = client.post(
            "/v1/discover",
            json={"utterance": "I want new card", "conllu": block_for("I want new card")},
        )
        assert response.status_code == 200
        body = response.json()
        assert len(body["ranked"]) == 3
        assert all(entry["score"] < 0.5 for entry in body["ranked"])
        assert body["low_confidence"] is True

    def test_floor_comes_from_config(self):
        # the two-candidate tie scores 0.5 each; a floor above that trips
        strict = make_client(confidence_floor=0.6)
        response = strict.post(
            "/v1/discover",
            json={"utterance": "track card delivery", "conllu": block_for("track card delivery")},
        )
        assert response.status_code == 200
        body = response.json()
        assert body["ranked"][0]["score"] == 0.5
        assert body["low_confidence"] is True

    def test_no_parse_available_is_client_error(self, client):
        response = client.post("/v1/discover", json={"utterance": "no parse here"})
        assert response.status_code == 400
        assert "parse" in response.json()["error"]

    def test_blank_utterance_rejected(self, client):
        response = client.post("/v1/discover", json={"utterance": "   "})
        assert response.status_code == 400
        assert "utterance" in response.json()["error"]

    def test_missing_utterance_rejected(self, client):
        response = client.post("/v1/discover", json={"conllu": block_for("help")})
        assert response.status_code == 400

    def test_non_string_conllu_rejected(self, client):
        response = client.post("/v1/discover", json={"utterance": "help", "conllu": 5})
        assert response.status_code == 400
        assert "conllu" in response.json()["error"]

    def test_malformed_conllu_rejected(self, client):
        response = client.post(
            "/v1/discover",
            json={"utterance": "help", "conllu": "just one column\n\n"},
        )
        assert response.status_code == 400

    def test_invalid_tree_rejected(self, client):
        two_roots = (
            "# text = two roots\n"
            "1\ttwo\t_\tNOUN\t_\t_\t0\troot\t_\t_\n"
            "2\troots\t_\tNOUN\t_\t_\t0\troot\t_\t_\n\n"
        )
        response = client.post(
            "/v1/discover",
            json={"utterance": "two roots", "conllu": two_roots},
        )
        assert response.status_code == 400

    def test_unparseable_body_rejected(self, client):
        response = client.post(
            "/v1/discover",
            content=b"not json at all",
            headers={"Content-Type": "application/json"},
        )
        assert response.status_code == 400
        assert response.json()["error"].startswith("malformed request")

    def test_non_object_body_rejected(self, client):
        response = client.post("/v1/discover", json=[1, 2, 3])
        assert response.status_code == 400

    def test_scorer_outage_maps_to_bad_gateway(self):
        broken = make_client(scorer="remote", scorer_endpoint="http://127.0.0.1:9")
        response = broken.post(
            "/v1/discover",
            json={"utterance": "exchange rate", "conllu": block_for("exchange rate")},
        )
        assert response.status_code == 502
        assert "error" in response.json()


class TestHealthz:
    def test_reference_backends_report_ok(self, client):
        response = client.get("/healthz")
        assert response.status_code == 200
        body = response.json()
        assert body["status"] == "ok"
        assert body["dependencies"] == {
            "parser": {"mode": "conllu-file", "status": "ok"},
            "scorer": {"mode": "reference", "status": "ok"},
            "embedder": {"mode": "reference", "status": "ok"},
        }

    def test_remote_outage_reported_not_fatal(self):
        broken = make_client(embedder="remote", embedder_endpoint="http://127.0.0.1:9")
        response = broken.get("/healthz")
        assert response.status_code == 200
        embedder = response.json()["dependencies"]["embedder"]
        assert embedder["mode"] == "remote"
        assert embedder["endpoint"] == "http://127.0.0.1:9"
        assert embedder["status"] == "unreachable"


class TestDependencyStatus:
    def test_reference_modes_skip_probing(self):
        pipeline = Pipeline(make_config(None, wordnet_dir="bundled"))
        status = dependency_status(pipeline)
        assert all(entry["status"] == "ok" for entry in status.values())
        assert "endpoint" not in status["scorer"]
