"""Model backends behind the three endpoints.

Each backend is a small adapter from a loaded model to the wire payload
shape, so the app can be exercised with any object exposing the same
methods. Requests larger than the configured batch size are split and
re-joined in order; probabilities are finished in float64 so the served
distributions sum to one well inside the wire tolerance.
"""

from __future__ import annotations

import torch

from .errors import InferenceError, ModelLoadError

NLI_LABELS = ("entailment", "neutral", "contradiction")


def _batches(items: list, size: int):
    for start in range(0, len(items), size):
        yield items[start : start + size]


def softmax_distribution(logits, id2label: dict[int, str]) -> dict[str, float]:
    """Three-way softmax keyed by the model's own label names."""
    values = torch.as_tensor(logits, dtype=torch.float64)
    probabilities = torch.softmax(values, dim=-1).tolist()
    return {id2label[position]: probability for position, probability in enumerate(probabilities)}


def _checked_labels(config) -> dict[int, str]:
    """The model's id->label map, lowercased, or a load error if it is not NLI-shaped."""
    raw = getattr(config, "id2label", None) or {}
    labels = {int(position): str(name).lower() for position, name in raw.items()}
    if sorted(labels) != [0, 1, 2] or set(labels.values()) != set(NLI_LABELS):
        raise ModelLoadError(
            "model labels must be exactly entailment/neutral/contradiction across "
            f"three classes, got {raw!r}"
        )
    return labels


class NliScorer:
    """Scores (premise, hypothesis) pairs with a sequence classification model."""

    def __init__(self, tokenizer, model, batch_size: int):
        self.tokenizer = tokenizer
        self.model = model.eval()
        self.batch_size = batch_size
        self.id2label = _checked_labels(model.config)

    def judge(self, premise: str, hypotheses: list[str]) -> list[dict[str, float]]:
        judgments = []
        for chunk in _batches(hypotheses, self.batch_size):
            encoded = self.tokenizer(
                [premise] * len(chunk), chunk,
                padding=True, truncation=True, return_tensors="pt",
            )
            with torch.no_grad():
                logits = self.model(**encoded).logits
            judgments.extend(softmax_distribution(row, self.id2label) for row in logits)
        return judgments


class SentenceEmbedder:
    """Mean-pooled, unit-normalized sentence vectors from an encoder model."""

    def __init__(self, tokenizer, model, batch_size: int):
        self.tokenizer = tokenizer
        self.model = model.eval()
        self.batch_size = batch_size

    def embed(self, texts: list[str]) -> list[list[float]]:
        vectors = []
        for chunk in _batches(texts, self.batch_size):
            encoded = self.tokenizer(
                chunk, padding=True, truncation=True, return_tensors="pt"
            )
            with torch.no_grad():
                hidden = self.model(**encoded).last_hidden_state
            mask = encoded["attention_mask"].unsqueeze(-1).to(hidden.dtype)
            pooled = (hidden * mask).sum(dim=1).double() / mask.sum(dim=1).clamp(min=1).double()
            norms = pooled.norm(dim=-1, keepdim=True)
            if (norms == 0).any():
                raise InferenceError("embedding collapsed to the zero vector")
            vectors.extend((pooled / norms).tolist())
        return vectors


class SpacyParser:
    """Dependency parses from a loaded spaCy pipeline."""

    def __init__(self, nlp):
        self.nlp = nlp

    def parse(self, text: str) -> list[dict]:
        doc = self.nlp(text)
        return [
            {
                "index": token.i + 1,
                "form": token.text,
                "upos": token.pos_,
                "head": 0 if token.head is token else token.head.i + 1,
                "deprel": token.dep_.lower(),
            }
            for token in doc
        ]


def load_nli(model_id: str, batch_size: int) -> NliScorer:
    from transformers import AutoModelForSequenceClassification, AutoTokenizer

    try:
        tokenizer = AutoTokenizer.from_pretrained(model_id)
        model = AutoModelForSequenceClassification.from_pretrained(model_id)
    except Exception as exc:
        raise ModelLoadError(f"cannot load NLI model {model_id!r}: {exc}") from exc
    return NliScorer(tokenizer, model, batch_size)


def load_embedder(model_id: str, batch_size: int) -> SentenceEmbedder:
    from transformers import AutoModel, AutoTokenizer

    try:
        tokenizer = AutoTokenizer.from_pretrained(model_id)
        model = AutoModel.from_pretrained(model_id)
    except Exception as exc:
        raise ModelLoadError(f"cannot load embedding model {model_id!r}: {exc}") from exc
    return SentenceEmbedder(tokenizer, model, batch_size)


def load_parser(model_id: str) -> SpacyParser:
    try:
        import spacy
    except ImportError as exc:
        raise ModelLoadError(
            f"cannot load parser model {model_id!r}: spacy is not installed"
        ) from exc
    try:
        nlp = spacy.load(model_id)
    except Exception as exc:
        raise ModelLoadError(f"cannot load parser model {model_id!r}: {exc}") from exc
    return SpacyParser(nlp)
