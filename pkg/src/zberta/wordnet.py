"""Lemmatization and gloss lookup over Princeton WordNet 3.0 database files.

A lexicon directory must contain ``index.{noun,verb,adj,adv}`` and
``{noun,verb,adj,adv}.exc``; gloss lookup additionally needs ``data.noun``
and ``data.verb``. A trimmed lexicon in this exact format ships with the
package (see ``zberta.data.wordnet_mini``); any full Princeton 3.0
installation works as a drop-in replacement.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .errors import ConfigError, GlossLookupError, InputError


def bundled_lexicon_dir() -> Path:
    """Directory of the lexicon shipped inside the package."""
    return Path(str(resources.files("zberta").joinpath("data/wordnet_mini")))

NOUN = "noun"
VERB = "verb"
ADJ = "adj"
ADV = "adv"
POS_TAGS = (NOUN, VERB, ADJ, ADV)

_POS_ALIASES = {
    "noun": NOUN,
    "n": NOUN,
    "verb": VERB,
    "v": VERB,
    "adj": ADJ,
    "adjective": ADJ,
    "a": ADJ,
    "adv": ADV,
    "adverb": ADV,
    "r": ADV,
}

# Morphy detachment rules, tried in order; the first candidate present in
# the index for the POS wins.
DETACHMENT_RULES: dict[str, tuple[tuple[str, str], ...]] = {
    NOUN: (
        ("s", ""),
        ("ses", "s"),
        ("ves", "f"),
        ("xes", "x"),
        ("zes", "z"),
        ("ches", "ch"),
        ("shes", "sh"),
        ("men", "man"),
        ("ies", "y"),
    ),
    VERB: (
        ("s", ""),
        ("ies", "y"),
        ("es", "e"),
        ("es", ""),
        ("ed", "e"),
        ("ed", ""),
        ("ing", "e"),
        ("ing", ""),
    ),
    ADJ: (
        ("er", ""),
        ("est", ""),
        ("er", "e"),
        ("est", "e"),
    ),
    ADV: (),
}


def canonical_pos(pos: str) -> str:
    try:
        return _POS_ALIASES[pos.lower()]
    except KeyError:
        raise InputError(f"unknown part of speech {pos!r}") from None


def _read_lines(path: Path) -> list[str]:
    try:
        return path.read_text(encoding="utf-8").splitlines()
    except UnicodeDecodeError:
        return path.read_text(encoding="latin-1").splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read lexicon file {path}: {exc}") from exc


def _require(directory: Path, name: str) -> Path:
    path = directory / name
    if not path.is_file():
        raise ConfigError(f"lexicon directory {directory} is missing {name}")
    return path


def _parse_index(path: Path) -> dict[str, tuple[str, ...]]:
    """Map each lemma to its synset offsets, in sense (frequency) order."""
    senses: dict[str, tuple[str, ...]] = {}
    for line in _read_lines(path):
        if not line or line.startswith(" "):
            continue  # license header
        fields = line.split()
        if len(fields) < 4:
            continue
        lemma = fields[0]
        try:
            synset_count = int(fields[2])
        except ValueError:
            continue
        if synset_count < 1 or len(fields) < synset_count:
            continue
        senses[lemma] = tuple(fields[-synset_count:])
    return senses


def _parse_exceptions(path: Path) -> dict[str, str]:
    exceptions: dict[str, str] = {}
    for line in _read_lines(path):
        if not line or line.startswith(" "):
            continue
        fields = line.split()
        if len(fields) >= 2:
            exceptions[fields[0]] = fields[1]
    return exceptions


def _parse_glosses(path: Path) -> dict[str, str]:
    glosses: dict[str, str] = {}
    for line in _read_lines(path):
        if not line or line.startswith(" "):
            continue
        head, sep, gloss = line.partition("|")
        if not sep:
            continue
        fields = head.split()
        if fields:
            glosses[fields[0]] = gloss.strip()
    return glosses


class LemmaLexicon:
    """Morphy-style lemmatizer: exception lists first, then suffix detachment.

    Immutable once loaded; safe to share across threads.
    """

    def __init__(self, index, exceptions):
        self._index = {pos: frozenset(index[pos]) for pos in POS_TAGS}
        self._exceptions = {pos: dict(exceptions[pos]) for pos in POS_TAGS}
        self._sorted_nouns = tuple(sorted(self._index[NOUN]))

    @classmethod
    def from_dir(cls, directory: str | Path) -> "LemmaLexicon":
        directory = Path(directory)
        index = {}
        exceptions = {}
        for pos in POS_TAGS:
            index[pos] = set(_parse_index(_require(directory, f"index.{pos}")))
            exceptions[pos] = _parse_exceptions(_require(directory, f"{pos}.exc"))
        return cls(index, exceptions)

    def contains(self, lemma: str, pos: str) -> bool:
        return lemma.lower() in self._index[canonical_pos(pos)]

    def sorted_noun_lemmas(self) -> tuple[str, ...]:
        return self._sorted_nouns

    def lemmatize(self, word: str, pos: str) -> str:
        """Reduce ``word`` to its dictionary form for the given POS.

        The exception list takes priority; otherwise detachment rules are
        applied in order and the first candidate present in the index wins.
        Unknown words come back lowercased but otherwise unchanged.
        """
        if not word:
            raise InputError("cannot lemmatize an empty word")
        pos = canonical_pos(pos)
        word = word.lower()
        exception = self._exceptions[pos].get(word)
        if exception is not None:
            return exception
        derived = self._derive(word, pos)
        return derived if derived is not None else word

    def _derive(self, word: str, pos: str) -> str | None:
        index = self._index[pos]
        for suffix, replacement in DETACHMENT_RULES[pos]:
            if word.endswith(suffix) and len(word) > len(suffix):
                candidate = word[: -len(suffix)] + replacement
                if candidate and candidate in index:
                    return candidate
        return None

    def lemmatize_any(self, word: str) -> str:
        """Lemmatize trying noun, verb, adj, adv in order.

        The first POS whose exception list or detachment rules produce a
        known lemma wins; words no POS can resolve pass through lowercased.
        """
        word = word.lower()
        for pos in POS_TAGS:
            exception = self._exceptions[pos].get(word)
            if exception is not None:
                return exception
            derived = self._derive(word, pos)
            if derived is not None:
                return derived
        return word


def _strip_gloss_examples(gloss: str) -> str:
    """Reduce a raw data-file gloss to its bare definition.

    Trailing quoted example sentences (``; "..."``) and trailing
    parenthesized illustrations (``(as goods or mail)``) are removed.
    """
    kept = []
    for segment in gloss.split(";"):
        if segment.strip().startswith('"'):
            break
        kept.append(segment)
    text = ";".join(kept).strip()
    while text.endswith(")"):
        depth = 0
        start = None
        for i in range(len(text) - 1, -1, -1):
            if text[i] == ")":
                depth += 1
            elif text[i] == "(":
                depth -= 1
                if depth == 0:
                    start = i
                    break
        if start is None:
            break
        text = text[:start].rstrip()
    return text


class GlossStore:
    """Sense definitions for nouns and verbs, noun senses preferred."""

    def __init__(self, senses, glosses):
        self._senses = senses
        self._glosses = glosses

    @classmethod
    def from_dir(cls, directory: str | Path) -> "GlossStore":
        directory = Path(directory)
        senses = {
            pos: _parse_index(_require(directory, f"index.{pos}"))
            for pos in (NOUN, VERB)
        }
        glosses = {
            pos: _parse_glosses(_require(directory, f"data.{pos}"))
            for pos in (NOUN, VERB)
        }
        return cls(senses, glosses)

    def definition(self, word: str) -> str:
        """Gloss of the first noun sense of ``word``, else its first verb sense."""
        word = word.lower()
        for pos in (NOUN, VERB):
            for offset in self._senses[pos].get(word, ()):
                gloss = self._glosses[pos].get(offset)
                if gloss is not None:
                    return _strip_gloss_examples(gloss)
        raise GlossLookupError(f"no noun or verb sense found for {word!r}")
