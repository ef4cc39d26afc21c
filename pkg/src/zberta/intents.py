"""Candidate intent extraction from dependency parses.

Candidates are action-object word pairs mined from three arc relations
(direct object, adjectival modifier, compound) plus maximum-degree POS
pairings, then lemmatized. A fallback pair keeps the output non-empty for
any utterance of two or more tokens.
"""

from __future__ import annotations

from dataclasses import dataclass

from .conllu import ParsedUtterance, Token
from .errors import InputError
from .wordnet import ADJ, NOUN, VERB, LemmaLexicon

ARC_DOBJ = "arc-dobj"
ARC_AMOD = "arc-amod"
ARC_COMPOUND = "arc-compound"
DEGREE_VERB_NOUN = "degree-verb-noun"
DEGREE_ADJ_PRON = "degree-adj-pron"
FALLBACK_ROOT_PAIR = "fallback-root-pair"
SINGLE_TOKEN = "single-token"

PROVENANCES = (
    ARC_DOBJ,
    ARC_AMOD,
    ARC_COMPOUND,
    DEGREE_VERB_NOUN,
    DEGREE_ADJ_PRON,
    FALLBACK_ROOT_PAIR,
    SINGLE_TOKEN,
)

DEFAULT_DOBJ_ALIASES = ("dobj", "obj")
_AMOD_ALIASES = ("amod",)
_COMPOUND_ALIASES = ("compound",)


@dataclass(frozen=True)
class CandidateIntent:
    """An action-object pair; action is empty only for single-token input."""

    action: str
    object: str
    provenance: str

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise InputError(f"unknown provenance {self.provenance!r}")
        if not self.object:
            raise InputError("candidate object must be non-empty")
        if not self.action and self.provenance != SINGLE_TOKEN:
            raise InputError("candidate action must be non-empty")

    def label(self) -> str:
        """Hyphenated label form, e.g. "track-delivery"."""
        return f"{self.action}-{self.object}" if self.action else self.object

    def phrase(self) -> str:
        """Space-joined form used for hypothesis templating."""
        return f"{self.action} {self.object}" if self.action else self.object

    def pair(self) -> tuple[str, str]:
        return (self.action, self.object)

    def to_dict(self) -> dict:
        return {"action": self.action, "object": self.object, "provenance": self.provenance}


def candidate_record(utterance: str, candidates: list[CandidateIntent]) -> dict:
    """JSONL record shape for raw candidate output."""
    return {"utterance": utterance, "candidates": [c.to_dict() for c in candidates]}


def _children(u: ParsedUtterance) -> dict[int, list[Token]]:
    children: dict[int, list[Token]] = {token.index: [] for token in u.tokens}
    for token in u.tokens:
        if token.head != 0:
            children[token.head].append(token)
    return children


def _degree(u: ParsedUtterance) -> dict[int, int]:
    """Incident arc count per token; the artificial root arc is excluded."""
    children = _children(u)
    return {
        token.index: (token.head != 0) + len(children[token.index])
        for token in u.tokens
    }


def extract_arc_candidates(
    u: ParsedUtterance,
    dobj_aliases: tuple[str, ...] = DEFAULT_DOBJ_ALIASES,
) -> list[CandidateIntent]:
    """Word pairs from dobj/obj, amod, and compound arcs, not yet lemmatized.

    Arcs are visited governor-first in token order. Direct objects emit
    (head, dependent) so the verb leads; amod and compound emit
    (dependent, head) so the modifier leads.
    """
    dobj = tuple(alias.lower() for alias in dobj_aliases)
    children = _children(u)
    pairs: list[CandidateIntent] = []
    seen: set[tuple[str, str]] = set()
    for governor in u.tokens:
        for dependent in children[governor.index]:
            relation = dependent.deprel
            if relation in dobj:
                action, obj, provenance = governor.surface, dependent.surface, ARC_DOBJ
            elif relation in _AMOD_ALIASES:
                action, obj, provenance = dependent.surface, governor.surface, ARC_AMOD
            elif relation in _COMPOUND_ALIASES:
                action, obj, provenance = dependent.surface, governor.surface, ARC_COMPOUND
            else:
                continue
            pair = (action.lower(), obj.lower())
            if pair not in seen:
                seen.add(pair)
                pairs.append(CandidateIntent(pair[0], pair[1], provenance))
    return pairs


def _pos_winner(u: ParsedUtterance, degrees: dict[int, int], upos: str) -> Token | None:
    best: Token | None = None
    for token in u.tokens:
        if token.upos != upos:
            continue
        if best is None or degrees[token.index] > degrees[best.index]:
            best = token
    return best


def extract_degree_candidates(
    u: ParsedUtterance,
    existing: list[CandidateIntent] = (),
) -> list[CandidateIntent]:
    """Maximum-degree (VERB, NOUN) and (ADJ, PRON) pairs, not yet lemmatized.

    Degree ties go to the lowest token index. Pairs that duplicate an
    already-extracted arc candidate are dropped.
    """
    degrees = _degree(u)
    seen = {candidate.pair() for candidate in existing}
    pairs: list[CandidateIntent] = []
    for first_pos, second_pos, provenance in (
        ("VERB", "NOUN", DEGREE_VERB_NOUN),
        ("ADJ", "PRON", DEGREE_ADJ_PRON),
    ):
        first = _pos_winner(u, degrees, first_pos)
        second = _pos_winner(u, degrees, second_pos)
        if first is None or second is None:
            continue
        pair = (first.surface.lower(), second.surface.lower())
        if pair not in seen:
            seen.add(pair)
            pairs.append(CandidateIntent(pair[0], pair[1], provenance))
    return pairs


_ACTION_POS = {
    ARC_DOBJ: VERB,
    DEGREE_VERB_NOUN: VERB,
    ARC_AMOD: ADJ,
    DEGREE_ADJ_PRON: ADJ,
    ARC_COMPOUND: NOUN,
}


def _lemmatized(candidate: CandidateIntent, lexicon: LemmaLexicon) -> CandidateIntent:
    action = lexicon.lemmatize(candidate.action, _ACTION_POS[candidate.provenance])
    if candidate.provenance == DEGREE_ADJ_PRON:
        obj = candidate.object  # pronouns pass through unlemmatized
    else:
        obj = lexicon.lemmatize(candidate.object, NOUN)
    return CandidateIntent(action, obj, candidate.provenance)


def _fallback_pair(u: ParsedUtterance, lexicon: LemmaLexicon) -> CandidateIntent:
    degrees = _degree(u)
    root = next(token for token in u.tokens if token.head == 0)
    partner = max(
        (token for token in u.tokens if token.head != 0),
        key=lambda token: (degrees[token.index], -token.index),
    )
    return CandidateIntent(
        lexicon.lemmatize_any(root.surface),
        lexicon.lemmatize_any(partner.surface),
        FALLBACK_ROOT_PAIR,
    )


def generate_intents(
    u: ParsedUtterance,
    lexicon: LemmaLexicon,
    dobj_aliases: tuple[str, ...] = DEFAULT_DOBJ_ALIASES,
) -> list[CandidateIntent]:
    """All candidate intents for an utterance, lemmatized and deduplicated.

    Arc candidates come first, then degree candidates. Actions are
    lemmatized as verbs (dobj and degree pairs), adjectives (amod and
    adj-pron pairs), or nouns (compound); objects as nouns, except pronoun
    partners which pass through. Never empty: a two-or-more-token utterance
    with no extracted pairs falls back to (root, highest-degree token), and
    a single-token utterance yields one degenerate object-only candidate.
    """
    if len(u.tokens) == 1:
        lemma = lexicon.lemmatize_any(u.tokens[0].surface)
        return [CandidateIntent("", lemma, SINGLE_TOKEN)]
    arcs = extract_arc_candidates(u, dobj_aliases)
    raw = arcs + extract_degree_candidates(u, arcs)
    result: list[CandidateIntent] = []
    seen: set[tuple[str, str]] = set()
    for candidate in raw:
        lemmatized = _lemmatized(candidate, lexicon)
        if lemmatized.pair() not in seen:
            seen.add(lemmatized.pair())
            result.append(lemmatized)
    if not result:
        return [_fallback_pair(u, lexicon)]
    return result
