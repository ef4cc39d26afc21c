"""Backend behavior that holds for any model weights: softmax and label
mapping, batching, ordering, normalization, determinism, load errors."""

import importlib.util
import math

import pytest
import torch
from transformers import BertConfig, BertForSequenceClassification

from conftest import NLI_ID2LABEL, tiny_config, write_tokenizer
from zberta_sidecar.errors import ModelLoadError
from zberta_sidecar.models import (
    NLI_LABELS,
    SpacyParser,
    load_embedder,
    load_nli,
    load_parser,
    softmax_distribution,
)


def oracle_softmax(logits):
    peak = max(logits)
    exps = [math.exp(value - peak) for value in logits]
    total = math.fsum(exps)
    return [value / total for value in exps]


class TestSoftmaxDistribution:
    def test_matches_independent_computation(self):
        logits = [0.5, -1.0, 2.0]
        expected = oracle_softmax(logits)
        got = softmax_distribution(logits, NLI_ID2LABEL)
        for position, label in NLI_ID2LABEL.items():
            assert abs(got[label] - expected[position]) <= 1e-12

    def test_label_names_come_from_the_mapping(self):
        # position 2 has the largest logit; the scrambled map calls it contradiction
        got = softmax_distribution([0.5, -1.0, 2.0], NLI_ID2LABEL)
        assert set(got) == set(NLI_LABELS)
        assert max(got, key=got.get) == "contradiction"

    def test_distribution_sums_to_one(self):
        got = softmax_distribution([3.0, 3.0, -40.0], NLI_ID2LABEL)
        assert abs(math.fsum(got.values()) - 1.0) <= 1e-12


HYPOTHESES = ["a man is awake", "card delivery?", "exchange rate", "track my card", "help!"]


class TestNliScorer:
    def test_one_judgment_per_hypothesis_in_order(self, nli):
        judgments = nli.judge("a man is sleeping", HYPOTHESES)
        assert len(judgments) == len(HYPOTHESES)
        singles = [nli.judge("a man is sleeping", [h])[0] for h in HYPOTHESES]
        for joint, alone in zip(judgments, singles):
            for label in NLI_LABELS:
                assert abs(joint[label] - alone[label]) <= 1e-6

    def test_distributions_are_valid(self, nli):
        for judgment in nli.judge("a man is sleeping", HYPOTHESES):
            assert set(judgment) == set(NLI_LABELS)
            assert all(0.0 <= value <= 1.0 for value in judgment.values())
            assert abs(math.fsum(judgment.values()) - 1.0) <= 1e-9

    def test_batch_split_preserves_results(self, nli, nli_model_dir):
        one_at_a_time = load_nli(str(nli_model_dir), batch_size=1)
        wide = nli.judge("a man is sleeping", HYPOTHESES)
        narrow = one_at_a_time.judge("a man is sleeping", HYPOTHESES)
        for a, b in zip(wide, narrow):
            for label in NLI_LABELS:
                assert abs(a[label] - b[label]) <= 1e-6

    def test_identical_calls_identical_results(self, nli):
        first = nli.judge("a man is sleeping", HYPOTHESES)
        second = nli.judge("a man is sleeping", HYPOTHESES)
        assert first == second

    def test_scrambled_label_order_is_honored(self, nli):
        assert nli.id2label == NLI_ID2LABEL


class TestSentenceEmbedder:
    def test_unit_norm_within_wire_tolerance(self, embedder):
        for vector in embedder.embed(["card delivery", "what is the exchange rate?", "!"]):
            norm = math.fsum(value * value for value in vector) ** 0.5
            assert abs(norm - 1.0) <= 1e-6

    def test_equal_texts_equal_vectors(self, embedder):
        first, second = embedder.embed(["card delivery", "card delivery"])
        assert first == second

    def test_identical_calls_identical_results(self, embedder):
        texts = ["card delivery", "exchange rate"]
        assert embedder.embed(texts) == embedder.embed(texts)

    def test_fixed_dimension(self, embedder):
        vectors = embedder.embed(["a", "a man is sleeping", "track my card delivery now"])
        assert len({len(vector) for vector in vectors}) == 1

    def test_batch_split_preserves_results(self, embedder, embed_model_dir):
        one_at_a_time = load_embedder(str(embed_model_dir), batch_size=1)
        texts = ["card delivery", "exchange rate", "a man is awake", "help!", "pin blocked"]
        for a, b in zip(embedder.embed(texts), one_at_a_time.embed(texts)):
            assert max(abs(x - y) for x, y in zip(a, b)) <= 1e-6

    def test_long_input_truncated_not_crashed(self, embedder):
        (vector,) = embedder.embed(["card delivery " * 200])
        norm = math.fsum(value * value for value in vector) ** 0.5
        assert abs(norm - 1.0) <= 1e-6


class TestLoaders:
    def test_nonexistent_path_is_load_error(self, tmp_path):
        with pytest.raises(ModelLoadError, match="cannot load NLI model"):
            load_nli(str(tmp_path / "nowhere"), batch_size=1)

    def test_two_label_model_rejected(self, tmp_path):
        path = tmp_path / "two-label"
        path.mkdir()
        torch.manual_seed(0)
        config = tiny_config(
            num_labels=2,
            id2label={0: "entailment", 1: "contradiction"},
            label2id={"entailment": 0, "contradiction": 1},
        )
        BertForSequenceClassification(config).save_pretrained(path)
        write_tokenizer(path)
        with pytest.raises(ModelLoadError, match="entailment/neutral/contradiction"):
            load_nli(str(path), batch_size=1)

    def test_unnamed_labels_rejected(self, tmp_path):
        # default configs ship LABEL_0/1/2, which says nothing about order
        path = tmp_path / "unnamed"
        path.mkdir()
        torch.manual_seed(0)
        BertForSequenceClassification(tiny_config(num_labels=3)).save_pretrained(path)
        write_tokenizer(path)
        with pytest.raises(ModelLoadError, match="entailment/neutral/contradiction"):
            load_nli(str(path), batch_size=1)

    @pytest.mark.skipif(
        importlib.util.find_spec("spacy") is not None,
        reason="spacy present; the missing-dependency path cannot fire",
    )
    def test_parser_without_spacy_is_load_error(self):
        with pytest.raises(ModelLoadError, match="spacy is not installed"):
            load_parser("en_core_web_sm")


class _Word:
    def __init__(self, i, text, pos, dep):
        self.i = i
        self.text = text
        self.pos_ = pos
        self.dep_ = dep
        self.head = self


class _FakeNlp:
    """Just enough of the spaCy Doc surface for the adapter."""

    def __call__(self, text):
        card = _Word(0, "card", "NOUN", "COMPOUND")
        delivery = _Word(1, "delivery", "NOUN", "ROOT")
        card.head = delivery
        return [card, delivery]


class TestSpacyAdapter:
    def test_maps_doc_to_wire_tokens(self):
        tokens = SpacyParser(_FakeNlp()).parse("card delivery")
        assert tokens == [
            {"index": 1, "form": "card", "upos": "NOUN", "head": 2, "deprel": "compound"},
            {"index": 2, "form": "delivery", "upos": "NOUN", "head": 0, "deprel": "root"},
        ]
