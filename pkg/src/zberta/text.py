"""Shared text pipeline: tokenization, stopword filtering, content lemmas.

The reference scorer, the reference embedder, and key-word extraction all
sit on this exact pipeline, so their notion of "content lemma" can never
drift apart.
"""

from __future__ import annotations

import re

from .wordnet import LemmaLexicon

# Fixed stopword list; applied to lowercased surface tokens before
# lemmatization. Deliberately small and embedded rather than configurable.
STOPWORDS = frozenset({
    "a", "an", "the", "is", "are", "was", "were", "be", "been", "this",
    "that", "i", "you", "my", "your", "me", "we", "it", "to", "of", "in",
    "on", "for", "about", "do", "does", "did", "what", "how", "example",
})

_TOKEN_RE = re.compile(r"[a-z0-9]+")


def tokenize(text: str) -> list[str]:
    """Lowercased alphanumeric runs, in order of appearance."""
    return _TOKEN_RE.findall(text.lower())


def content_tokens(text: str) -> list[str]:
    return [token for token in tokenize(text) if token not in STOPWORDS]


def content_lemmas(text: str, lexicon: LemmaLexicon) -> list[str]:
    """Lemmatized non-stopword tokens, order and multiplicity preserved."""
    return [lexicon.lemmatize_any(token) for token in content_tokens(text)]
