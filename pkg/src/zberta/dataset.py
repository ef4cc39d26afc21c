"""Turn an intent-classification corpus into an NLI corpus.

For each utterance the most relevant word is extracted (maximum embedding
similarity to the whole utterance), its dictionary gloss becomes an
entailed hypothesis of the form "this text is about <gloss>", and sampled
unrelated words yield non-entailed counterparts.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .errors import CorpusError, ExtractionError, GlossLookupError, InputError, SamplingError
from .evaluation import cosine
from .text import content_tokens
from .wordnet import NOUN, GlossStore, LemmaLexicon

log = logging.getLogger(__name__)

HYPOTHESIS_PREFIX = "this text is about "

ENTAILMENT = "entailment"
NEUTRAL = "neutral"
CONTRADICTION = "contradiction"
LABELS = (ENTAILMENT, NEUTRAL, CONTRADICTION)

_MAX_REJECTIONS = 1000
_U64 = 0xFFFFFFFFFFFFFFFF


@dataclass(frozen=True)
class NLIExample:
    premise: str
    hypothesis: str
    label: str
    key_word: str
    definition: str

    def __post_init__(self):
        if self.label not in LABELS:
            raise InputError(f"unknown NLI label {self.label!r}")

    def to_record(self) -> dict:
        return {
            "premise": self.premise,
            "hypothesis": self.hypothesis,
            "label": self.label,
            "key_word": self.key_word,
        }


class SplitMix64:
    """SplitMix64 pseudo-random generator; 64-bit state, 64-bit outputs."""

    def __init__(self, seed: int):
        self._state = seed & _U64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _U64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _U64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _U64
        return z ^ (z >> 31)


class SamplerState:
    """Deterministic negative-word sampler over a sorted candidate pool."""

    def __init__(self, seed: int, pool: list[str]):
        if not pool:
            raise InputError("sampler pool must be non-empty")
        self.seed = seed & _U64
        self.pool = tuple(sorted(pool))
        self._rng = SplitMix64(self.seed)

    def draw(self, reject) -> str:
        """Next pool word for which ``reject(word)`` is false.

        Rejected draws are retried; more than 1000 rejections aborts.
        """
        rejections = 0
        while True:
            word = self.pool[self._rng.next_u64() % len(self.pool)]
            if not reject(word):
                return word
            rejections += 1
            if rejections > _MAX_REJECTIONS:
                raise SamplingError(
                    f"gave up after {_MAX_REJECTIONS} rejected draws from a "
                    f"pool of {len(self.pool)}"
                )


def extract_key_word(utterance: str, embedder, lexicon: LemmaLexicon) -> str:
    """Content token most similar to the whole utterance, lemmatized as noun.

    Ties go to the earliest token position.
    """
    tokens = content_tokens(utterance)
    if not tokens:
        raise ExtractionError(f"no content tokens in {utterance!r}")
    vectors = embedder.embed_many([utterance] + tokens)
    whole = vectors[0]
    best_token = tokens[0]
    best_similarity = cosine(vectors[1], whole)
    for index in range(1, len(tokens)):
        similarity = cosine(vectors[index + 1], whole)
        if similarity > best_similarity:
            best_similarity = similarity
            best_token = tokens[index]
    return lexicon.lemmatize(best_token, NOUN)


def build_entailed(
    utterance: str,
    embedder,
    glosses: GlossStore,
    lexicon: LemmaLexicon,
) -> NLIExample:
    """Entailed example: hypothesis built from the key word's own gloss."""
    key_word = extract_key_word(utterance, embedder, lexicon)
    definition = glosses.definition(key_word)
    return NLIExample(utterance, HYPOTHESIS_PREFIX + definition, ENTAILMENT, key_word, definition)


def build_negatives(
    utterance: str,
    k: int,
    sampler: SamplerState,
    glosses: GlossStore,
    key_word: str = "",
    label: str = CONTRADICTION,
) -> list[NLIExample]:
    """k non-entailed examples with sampled unrelated key words.

    A draw is rejected when the word occurs in the lowercased utterance,
    equals the utterance's extracted key word, or has no gloss.
    """
    if k < 0:
        raise InputError(f"negative count must be non-negative, got {k}")
    lowered = utterance.lower()
    examples = []
    for _ in range(k):
        definition = ""

        def reject(word: str) -> bool:
            nonlocal definition
            if word in lowered or word == key_word:
                return True
            try:
                definition = glosses.definition(word)
            except GlossLookupError:
                return True
            return False

        word = sampler.draw(reject)
        examples.append(
            NLIExample(utterance, HYPOTHESIS_PREFIX + definition, label, word, definition)
        )
    return examples


def transform_corpus(
    records: list[tuple[str, str]],
    k_neg: int,
    seed: int,
    embedder,
    glosses: GlossStore,
    lexicon: LemmaLexicon,
    neg_label: str = CONTRADICTION,
) -> list[NLIExample]:
    """One entailed example plus ``k_neg`` negatives per (utterance, label) record.

    Per-record sampler seeds derive as ``seed XOR record_index`` (0-based),
    so records transform independently and deterministically. Failing
    records are logged and skipped; more than half failing aborts.
    """
    if not records:
        raise InputError("transform needs at least one record")
    pool = list(lexicon.sorted_noun_lemmas())
    output: list[NLIExample] = []
    skipped = 0
    for index, (utterance, _intent) in enumerate(records):
        try:
            entailed = build_entailed(utterance, embedder, glosses, lexicon)
            sampler = SamplerState((seed ^ index) & _U64, pool)
            negatives = build_negatives(
                utterance, k_neg, sampler, glosses, entailed.key_word, neg_label
            )
        except (ExtractionError, GlossLookupError, SamplingError, InputError) as exc:
            log.warning("skipping record %d (%r): %s", index, utterance, exc)
            skipped += 1
            continue
        output.append(entailed)
        output.extend(negatives)
    if skipped * 2 > len(records):
        raise CorpusError(f"{skipped} of {len(records)} records failed to transform")
    return output
