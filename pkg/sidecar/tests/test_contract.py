"""Contract gate: a live sidecar must satisfy the intent package's wire
clients unmodified, including a full remote-everything pipeline run.

These tests print "[SECONDARY] contract conformance: PASS" once the
capstone passes, mirroring the primary acceptance checklist style.
"""

import math

import pytest

from _server import serve_in_thread
from zberta.config import make_config
from zberta.evaluation import cosine, evaluate_discovery
from zberta.nli import EntailmentJudgment
from zberta.pipeline import Pipeline
from zberta.service import dependency_status
from zberta.wire import RemoteEmbedder, RemoteScorer, parse_remote

from zberta_sidecar.app import create_app


@pytest.fixture(scope="module")
def endpoint(nli, embedder, fake_parser):
    app = create_app(
        nli, embedder, fake_parser,
        model_ids={"nli": "tiny-nli", "embed": "tiny-embed", "parser": "fake"},
    )
    with serve_in_thread(app) as url:
        yield url


@pytest.fixture(scope="module")
def remote_pipeline(endpoint):
    config = make_config(
        None,
        wordnet_dir="bundled",
        parser="remote",
        parser_endpoint=endpoint,
        scorer="remote",
        scorer_endpoint=endpoint,
        embedder="remote",
        embedder_endpoint=endpoint,
    )
    return Pipeline(config)


class TestScorerContract:
    def test_judgments_decode_and_sum_to_one(self, endpoint):
        judgments = RemoteScorer(endpoint).score(
            "a man is sleeping", ["a man is awake", "card delivery", "exchange rate"]
        )
        assert len(judgments) == 3
        for judgment in judgments:
            assert isinstance(judgment, EntailmentJudgment)
            total = judgment.p_entailment + judgment.p_neutral + judgment.p_contradiction
            assert abs(total - 1.0) <= 1e-9


class TestEmbedderContract:
    def test_vectors_decode_with_equal_dims(self, endpoint):
        vectors = RemoteEmbedder(endpoint).embed_many(["card delivery", "exchange rate"])
        assert len(vectors) == 2
        assert vectors[0].dim == vectors[1].dim

    def test_single_and_batched_embeddings_agree(self, endpoint):
        remote = RemoteEmbedder(endpoint)
        alone = remote.embed("card delivery")
        batched = remote.embed_many(["card delivery", "exchange rate"])[0]
        assert abs(cosine(alone, batched) - 1.0) <= 1e-6

    def test_identical_strings_reach_cosine_one(self, endpoint):
        report, _ = evaluate_discovery(
            [("card-delivery", "card-delivery")], RemoteEmbedder(endpoint)
        )
        assert abs(report.similarities[0] - 1.0) <= 1e-12


class TestParserContract:
    def test_parse_decodes_with_tree_invariants(self, endpoint):
        parsed = parse_remote("card delivery?", endpoint)
        assert [token.surface for token in parsed.tokens] == ["card", "delivery", "?"]
        assert all(token.deprel == token.deprel.lower() for token in parsed.tokens)
        compound = parsed.tokens[0]
        assert compound.deprel == "compound"
        assert compound.head == 2


class TestHealthContract:
    def test_primary_health_probe_sees_all_dependencies(self, remote_pipeline):
        status = dependency_status(remote_pipeline)
        assert {name: entry["status"] for name, entry in status.items()} == {
            "parser": "ok", "scorer": "ok", "embedder": "ok",
        }


class TestFullPipeline:
    def test_discover_end_to_end_over_http(self, remote_pipeline):
        prediction = remote_pipeline.discover("track card delivery")
        assert prediction.utterance == "track card delivery"
        labels = [label for label, _ in prediction.ranked]
        assert sorted(labels) == ["card-delivery", "track-delivery"]
        assert abs(math.fsum(score for _, score in prediction.ranked) - 1.0) <= 1e-9
        assert prediction.chosen in labels
        print("[SECONDARY] contract conformance: PASS")
