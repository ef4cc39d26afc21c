"""Similarity-based evaluation of discovered intents.

Covers the embedding cosine metric, a deterministic reference embedder for
model-free runs, the adaptive acceptance threshold t = max(0.5, mu +
alpha*sigma^2), per-class breakdowns, and exact-match accuracy for the
known-label mode.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass

from .errors import InputError
from .text import content_lemmas, tokenize
from .wordnet import LemmaLexicon

EMBED_DIM = 256

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_U64 = 0xFFFFFFFFFFFFFFFF


def fnv1a64(data: bytes) -> int:
    """FNV-1a 64-bit hash."""
    value = _FNV_OFFSET
    for byte in data:
        value = ((value ^ byte) * _FNV_PRIME) & _U64
    return value


@dataclass(frozen=True)
class EmbeddingVector:
    values: tuple[float, ...]

    def __post_init__(self):
        if len(self.values) == 0:
            raise InputError("embedding vector must have positive dimension")

    @property
    def dim(self) -> int:
        return len(self.values)

    @property
    def norm(self) -> float:
        return math.sqrt(math.fsum(v * v for v in self.values))


def cosine(a: EmbeddingVector, b: EmbeddingVector) -> float:
    """Cosine similarity, clamped to [-1, 1] to absorb rounding."""
    if a.dim != b.dim:
        raise InputError(f"dimension mismatch: {a.dim} vs {b.dim}")
    norm_a = a.norm
    norm_b = b.norm
    if norm_a == 0.0 or norm_b == 0.0:
        raise InputError("cosine of a zero vector is undefined")
    dot = math.fsum(x * y for x, y in zip(a.values, b.values))
    return min(1.0, max(-1.0, dot / (norm_a * norm_b)))


class ReferenceEmbedder:
    """Deterministic 256-dimensional bag-of-lemmas hashing embedder.

    Each content lemma bumps the coordinate at FNV-1a(lemma) mod 256; the
    vector is L2-normalized. Text whose every token is a stopword falls
    back to its raw lowercased tokens so the result is never all-zero.
    """

    def __init__(self, lexicon: LemmaLexicon):
        self._lexicon = lexicon

    def embed(self, text: str) -> EmbeddingVector:
        if not text:
            raise InputError("cannot embed empty text")
        bag = content_lemmas(text, self._lexicon)
        if not bag:
            bag = tokenize(text)
        if not bag:
            raise InputError(f"no embeddable tokens in {text!r}")
        values = [0.0] * EMBED_DIM
        for lemma in bag:
            values[fnv1a64(lemma.encode("utf-8")) % EMBED_DIM] += 1.0
        norm = math.sqrt(math.fsum(v * v for v in values))
        return EmbeddingVector(tuple(v / norm for v in values))

    def embed_many(self, texts: list[str]) -> list[EmbeddingVector]:
        return [self.embed(text) for text in texts]


@dataclass(frozen=True)
class ThresholdReport:
    n: int
    similarities: tuple[float, ...]
    mu: float
    sigma2: float
    alpha: float
    t: float
    accepted: int


def threshold(similarities: list[float], alpha: float = 0.5) -> ThresholdReport:
    """Adaptive acceptance threshold: 0.5 when mu <= 0.5, else mu + alpha*sigma2.

    sigma2 is the population variance (divide by n), so t >= 0.5 always.
    """
    if not similarities:
        raise InputError("threshold needs at least one similarity value")
    if alpha < 0:
        raise InputError(f"alpha must be non-negative, got {alpha}")
    n = len(similarities)
    mu = math.fsum(similarities) / n
    sigma2 = math.fsum((s - mu) ** 2 for s in similarities) / n
    t = 0.5 if mu <= 0.5 else mu + alpha * sigma2
    accepted = sum(1 for s in similarities if s >= t)
    return ThresholdReport(n, tuple(similarities), mu, sigma2, alpha, t, accepted)


@dataclass(frozen=True)
class ClassStats:
    mean: float
    count: int


def normalize_intent(label: str) -> str:
    """Label form used for embedding: lowercase, hyphens/underscores as spaces."""
    return label.replace("-", " ").replace("_", " ").lower()


def evaluate_discovery(
    pairs: list[tuple[str, str]],
    embedder,
    alpha: float = 0.5,
) -> tuple[ThresholdReport, dict[str, ClassStats]]:
    """Cosine-score (gold, predicted) intent pairs and aggregate.

    Intent strings are normalized before embedding. The breakdown is keyed
    by the original gold label, in first-appearance order.
    """
    if not pairs:
        raise InputError("evaluation needs at least one (gold, predicted) pair")
    texts = []
    for gold, predicted in pairs:
        texts.append(normalize_intent(gold))
        texts.append(normalize_intent(predicted))
    vectors = embedder.embed_many(texts)
    similarities = [
        cosine(vectors[2 * i], vectors[2 * i + 1]) for i in range(len(pairs))
    ]
    grouped: dict[str, list[float]] = {}
    for (gold, _), similarity in zip(pairs, similarities):
        grouped.setdefault(gold, []).append(similarity)
    breakdown = {
        gold: ClassStats(math.fsum(values) / len(values), len(values))
        for gold, values in grouped.items()
    }
    return threshold(similarities, alpha), breakdown


def evaluate_known(pairs: list[tuple[str, str]]) -> float:
    """Exact-match accuracy over (gold, predicted) label pairs."""
    if not pairs:
        raise InputError("evaluation needs at least one (gold, predicted) pair")
    return sum(1 for gold, predicted in pairs if gold == predicted) / len(pairs)


def build_report(
    report: ThresholdReport,
    breakdown: dict[str, ClassStats],
    repeat_mus: list[float],
) -> dict:
    """Assemble the JSON report shape shared by the CLI and the service."""
    return {
        "n": report.n,
        "mu": report.mu,
        "sigma2": report.sigma2,
        "alpha": report.alpha,
        "t": report.t,
        "accepted": report.accepted,
        "per_class": {
            label: {"mean": stats.mean, "count": stats.count}
            for label, stats in breakdown.items()
        },
        "repeats": {
            "mu_mean": math.fsum(repeat_mus) / len(repeat_mus),
            "mu_std": statistics.pstdev(repeat_mus),
        },
    }
