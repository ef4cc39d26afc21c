"""Zero-shot intent selection cast as natural language inference.

Each candidate intent is rendered into a hypothesis through a template;
an entailment scorer judges (utterance, hypothesis) pairs; candidates are
ranked by entailment strength. Scorers are duck-typed: anything with
``score(premise, hypotheses) -> list[EntailmentJudgment]`` plugs in.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ClassificationError, InputError
from .intents import CandidateIntent
from .text import content_lemmas
from .wordnet import LemmaLexicon

DEFAULT_TEMPLATE_PATTERN = "This example is {}."


@dataclass(frozen=True)
class HypothesisTemplate:
    pattern: str = DEFAULT_TEMPLATE_PATTERN

    def __post_init__(self):
        if self.pattern.count("{}") != 1:
            raise InputError(
                f"template must contain exactly one {{}} placeholder: {self.pattern!r}"
            )

    def render(self, label: str) -> str:
        return self.pattern.replace("{}", label)


@dataclass(frozen=True)
class EntailmentJudgment:
    """Probability distribution over the three NLI classes."""

    p_entailment: float
    p_neutral: float
    p_contradiction: float

    def __post_init__(self):
        for p in (self.p_entailment, self.p_neutral, self.p_contradiction):
            if not 0.0 <= p <= 1.0:
                raise InputError(f"NLI probability out of range: {p}")
        total = self.p_entailment + self.p_neutral + self.p_contradiction
        if abs(total - 1.0) > 1e-9:
            raise InputError(f"NLI probabilities sum to {total}, not 1")


@dataclass(frozen=True)
class IntentPrediction:
    """Ranked intent labels for one utterance; ``ranked[0]`` is the choice."""

    utterance: str
    ranked: tuple[tuple[str, float], ...]

    def __post_init__(self):
        if not self.ranked:
            raise InputError("prediction needs at least one ranked intent")
        scores = [score for _, score in self.ranked]
        if any(earlier < later for earlier, later in zip(scores, scores[1:])):
            raise InputError("ranked scores must be non-increasing")

    @property
    def chosen(self) -> str:
        return self.ranked[0][0]

    @property
    def top_score(self) -> float:
        return self.ranked[0][1]

    def to_record(self) -> dict:
        return {
            "utterance": self.utterance,
            "chosen": self.chosen,
            "ranked": [{"intent": label, "score": score} for label, score in self.ranked],
        }


def build_hypotheses(
    candidates: list[CandidateIntent],
    template: HypothesisTemplate = HypothesisTemplate(),
) -> list[str]:
    """One hypothesis per candidate, labels rendered as "action object"."""
    if not candidates:
        raise InputError("cannot build hypotheses from an empty candidate list")
    return [template.render(candidate.phrase()) for candidate in candidates]


def score_entailment(premise: str, hypotheses: list[str], scorer) -> list[EntailmentJudgment]:
    """Judge each (premise, hypothesis) pair, preserving hypothesis order."""
    if not hypotheses:
        raise InputError("cannot score an empty hypothesis list")
    judgments = scorer.score(premise, hypotheses)
    if len(judgments) != len(hypotheses):
        raise ClassificationError(
            f"scorer returned {len(judgments)} judgments for {len(hypotheses)} hypotheses"
        )
    return judgments


class ReferenceScorer:
    """Deterministic model-free scorer built on content-lemma overlap.

    With o = |C(premise) ∩ C(hypothesis)| / max(1, |C(hypothesis)|) over
    content-lemma sets, the judgment is (0.2 + 0.6·o) entailment with the
    remainder split evenly between neutral and contradiction.
    """

    def __init__(self, lexicon: LemmaLexicon):
        self._lexicon = lexicon

    def score(self, premise: str, hypotheses: list[str]) -> list[EntailmentJudgment]:
        premise_lemmas = set(content_lemmas(premise, self._lexicon))
        judgments = []
        for hypothesis in hypotheses:
            hypothesis_lemmas = set(content_lemmas(hypothesis, self._lexicon))
            overlap = len(premise_lemmas & hypothesis_lemmas) / max(1, len(hypothesis_lemmas))
            entailment = 0.2 + 0.6 * overlap
            rest = (0.8 - 0.6 * overlap) / 2
            judgments.append(EntailmentJudgment(entailment, rest, rest))
        return judgments


def _rank(
    utterance: str,
    labels: list[str],
    judgments: list[EntailmentJudgment],
    renormalize: bool,
) -> IntentPrediction:
    raw = []
    for judgment in judgments:
        denominator = judgment.p_entailment + judgment.p_contradiction
        raw.append(judgment.p_entailment / denominator if denominator > 0.0 else 0.0)
    total = math.fsum(raw)
    if total == 0.0:
        raise ClassificationError(
            "every candidate scored zero entailment against the utterance"
        )
    scores = [score / total for score in raw] if renormalize else raw
    order = sorted(zip(labels, scores), key=lambda pair: pair[1], reverse=True)
    return IntentPrediction(utterance, tuple(order))


def classify(
    utterance: str,
    candidates: list[CandidateIntent],
    scorer,
    template: HypothesisTemplate = HypothesisTemplate(),
    renormalize: bool = True,
) -> IntentPrediction:
    """Rank candidate intents by entailment against the utterance.

    Per-candidate score is p_entailment / (p_entailment + p_contradiction),
    renormalized to sum to 1 across candidates unless ``renormalize`` is
    off. Ties keep candidate-list order.
    """
    if not candidates:
        raise InputError("classification needs at least one candidate")
    judgments = score_entailment(utterance, build_hypotheses(candidates, template), scorer)
    return _rank(utterance, [c.label() for c in candidates], judgments, renormalize)


def classify_known(
    utterance: str,
    label_set: list[str],
    scorer,
    template: HypothesisTemplate = HypothesisTemplate(),
    renormalize: bool = True,
) -> IntentPrediction:
    """Rank a fixed label set instead of generated candidates.

    Hyphens and underscores in labels become spaces inside the hypothesis
    text; the prediction itself carries the original label strings.
    """
    if not label_set:
        raise InputError("classification needs at least one label")
    phrases = [label.replace("-", " ").replace("_", " ") for label in label_set]
    hypotheses = [template.render(phrase) for phrase in phrases]
    judgments = score_entailment(utterance, hypotheses, scorer)
    return _rank(utterance, list(label_set), judgments, renormalize)
