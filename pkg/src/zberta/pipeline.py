"""Runtime wiring shared by the CLI and the HTTP service.

A Pipeline owns the loaded lexicon plus the configured scorer, embedder,
and parser mode, and exposes the end-to-end operations over them. It is
immutable after construction and safe to share across requests.
"""

from __future__ import annotations

import functools
import logging

from .config import PipelineConfig
from .conllu import ParsedUtterance, read_conllu
from .dataset import NLIExample, transform_corpus
from .errors import InputError
from .intents import (
    FALLBACK_ROOT_PAIR,
    SINGLE_TOKEN,
    CandidateIntent,
    generate_intents,
)
from .nli import (
    HypothesisTemplate,
    IntentPrediction,
    ReferenceScorer,
    classify,
    classify_known,
)
from .evaluation import ReferenceEmbedder
from .wire import RemoteEmbedder, RemoteScorer, parse_remote
from .wordnet import GlossStore, LemmaLexicon

log = logging.getLogger(__name__)


class Pipeline:
    def __init__(self, config: PipelineConfig):
        self.config = config
        self.lexicon = LemmaLexicon.from_dir(config.wordnet_dir)
        self.template = HypothesisTemplate(config.template)
        if config.scorer == "remote":
            self.scorer = RemoteScorer(config.scorer_endpoint)
        else:
            self.scorer = ReferenceScorer(self.lexicon)
        if config.embedder == "remote":
            self.embedder = RemoteEmbedder(config.embedder_endpoint)
        else:
            self.embedder = ReferenceEmbedder(self.lexicon)

    @functools.cached_property
    def glosses(self) -> GlossStore:
        # loaded on demand: only corpus transformation needs the data files
        return GlossStore.from_dir(self.config.wordnet_dir)

    def parse(self, utterance: str, conllu_text: str | None = None) -> ParsedUtterance:
        """Parse from bundled CoNLL-U when present, else the remote parser."""
        if conllu_text is not None:
            utterances = read_conllu(conllu_text)
            if len(utterances) != 1:
                raise InputError(
                    f"expected exactly one sentence in the bundled parse, got {len(utterances)}"
                )
            return utterances[0]
        if self.config.parser == "remote":
            return parse_remote(utterance, self.config.parser_endpoint)
        raise InputError(
            "no parse available: record has no bundled CoNLL-U and no remote parser is configured"
        )

    def candidates(self, parsed: ParsedUtterance) -> list[CandidateIntent]:
        return generate_intents(parsed, self.lexicon, self.config.dobj_aliases)

    def discover(self, utterance: str, conllu_text: str | None = None) -> IntentPrediction:
        if not utterance or not utterance.strip():
            raise InputError("utterance must be non-empty")
        parsed = self.parse(utterance, conllu_text)
        candidates = self.candidates(parsed)
        if candidates and candidates[0].provenance in (FALLBACK_ROOT_PAIR, SINGLE_TOKEN):
            log.warning(
                "no arc or degree candidates for %r; falling back to %s",
                utterance,
                candidates[0].provenance,
            )
        return classify(
            utterance,
            candidates,
            self.scorer,
            self.template,
            renormalize=not self.config.raw_scores,
        )

    def classify_known(self, utterance: str, labels: list[str]) -> IntentPrediction:
        if not utterance or not utterance.strip():
            raise InputError("utterance must be non-empty")
        return classify_known(
            utterance,
            labels,
            self.scorer,
            self.template,
            renormalize=not self.config.raw_scores,
        )

    def transform(
        self,
        records: list[tuple[str, str]],
        k_neg: int,
        neg_label: str,
    ) -> list[NLIExample]:
        return transform_corpus(
            records,
            k_neg,
            self.config.seed,
            self.embedder,
            self.glosses,
            self.lexicon,
            neg_label,
        )
