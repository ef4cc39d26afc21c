"""Shared fixtures: tiny randomly initialized models, written to disk once
per session and loaded through the real loader paths.

Random weights carry no semantics, but every protocol-level property
(batching, ordering, label mapping, normalization, determinism) holds for
any weights, which is exactly what these tests pin. The parser backend is
a deterministic fake because spaCy is not part of this environment.
"""

import pytest
import torch
from transformers import BertConfig, BertForSequenceClassification, BertModel, BertTokenizer
from transformers.utils import logging as hf_logging

from zberta_sidecar.models import load_embedder, load_nli

hf_logging.disable_progress_bar()

VOCAB = [
    "[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]",
    "a", "man", "is", "sleeping", "awake",
    "card", "delivery", "track", "rate", "exchange",
    "the", "what", "my", "new", "lost",
    "payment", "pin", "blocked", "help", "want",
    "to", "i", "?", ".", "!",
]

# scrambled relative to the wire order on purpose: the mapping must come
# from the model config, not from positional assumptions
NLI_ID2LABEL = {0: "neutral", 1: "entailment", 2: "contradiction"}


def write_tokenizer(path):
    (path / "vocab.txt").write_text("\n".join(VOCAB) + "\n", encoding="utf-8")
    BertTokenizer(str(path / "vocab.txt"), model_max_length=64).save_pretrained(path)


def tiny_config(**extra):
    return BertConfig(
        vocab_size=len(VOCAB),
        hidden_size=32,
        num_hidden_layers=2,
        num_attention_heads=2,
        intermediate_size=64,
        max_position_embeddings=64,
        type_vocab_size=2,
        **extra,
    )


@pytest.fixture(scope="session")
def nli_model_dir(tmp_path_factory):
    path = tmp_path_factory.mktemp("nli-model")
    torch.manual_seed(7)
    config = tiny_config(
        num_labels=3,
        id2label=NLI_ID2LABEL,
        label2id={label: index for index, label in NLI_ID2LABEL.items()},
    )
    BertForSequenceClassification(config).save_pretrained(path)
    write_tokenizer(path)
    return path


@pytest.fixture(scope="session")
def embed_model_dir(tmp_path_factory):
    path = tmp_path_factory.mktemp("embed-model")
    torch.manual_seed(11)
    BertModel(tiny_config()).save_pretrained(path)
    write_tokenizer(path)
    return path


@pytest.fixture(scope="session")
def nli(nli_model_dir):
    return load_nli(str(nli_model_dir), batch_size=4)


@pytest.fixture(scope="session")
def embedder(embed_model_dir):
    return load_embedder(str(embed_model_dir), batch_size=4)


# deprels deliberately uppercased: lowering them is the app's job
CANNED_PARSES = {
    "card delivery?": [
        (1, "card", "NOUN", 2, "COMPOUND"),
        (2, "delivery", "NOUN", 0, "ROOT"),
        (3, "?", "PUNCT", 2, "PUNCT"),
    ],
    "track card delivery": [
        (1, "track", "VERB", 0, "ROOT"),
        (2, "card", "NOUN", 3, "COMPOUND"),
        (3, "delivery", "NOUN", 1, "OBJ"),
    ],
}


class FakeParser:
    """Deterministic stand-in for the spaCy backend."""

    def parse(self, text):
        rows = CANNED_PARSES.get(text)
        if rows is None:
            rows = [
                (i + 1, word, "NOUN", 0 if i == 0 else 1, "ROOT" if i == 0 else "DEP")
                for i, word in enumerate(text.split())
            ]
        return [dict(zip(("index", "form", "upos", "head", "deprel"), row)) for row in rows]


@pytest.fixture(scope="session")
def fake_parser():
    return FakeParser()
