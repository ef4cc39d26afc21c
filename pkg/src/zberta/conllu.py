"""CoNLL-U ingestion, serialization, and dependency-tree validation.

Only the ID, FORM, UPOS, HEAD, and DEPREL columns are consumed; everything
else is written back as ``_``. Multiword-token ranges (IDs with ``-``) and
empty nodes (IDs with ``.``) are skipped on read.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from typing import Iterable, Iterator, TextIO

from .errors import ConlluParseError, TreeValidationError

SOURCE_FILE = "file"
SOURCE_REMOTE = "remote-parser"

_COLUMNS = 10


def _normalize_cell(value: str) -> str:
    # Tabs and newlines would break the column / block structure.
    return value.replace("\t", " ").replace("\n", " ").replace("\r", " ")


@dataclass(frozen=True)
class Token:
    """One syntactic word: 1-based index, surface form, UPOS tag, head, deprel.

    ``head`` is 0 for the root token, otherwise the 1-based index of the
    governor. ``deprel`` is stored lowercase.
    """

    index: int
    surface: str
    upos: str
    head: int
    deprel: str

    def __post_init__(self):
        object.__setattr__(self, "deprel", self.deprel.lower())
        if self.index < 1:
            raise TreeValidationError(f"token index must be >= 1, got {self.index}")
        if self.head < 0:
            raise TreeValidationError(f"token head must be >= 0, got {self.head}")
        if self.head == self.index:
            raise TreeValidationError(
                f"token {self.index} ({self.surface!r}) is its own head"
            )
        if not self.upos:
            raise TreeValidationError(f"token {self.index} has an empty UPOS tag")
        if not self.deprel:
            raise TreeValidationError(f"token {self.index} has an empty deprel")


@dataclass(frozen=True)
class ParsedUtterance:
    """A validated single-rooted dependency tree over one utterance.

    ``source`` records provenance only and is excluded from equality, so the
    read/write round-trip law holds regardless of where a parse came from.
    """

    text: str
    tokens: tuple[Token, ...]
    source: str = field(default=SOURCE_FILE, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        _validate_tree(self.tokens, self.text)

    def token_at(self, index: int) -> Token:
        return self.tokens[index - 1]


def _validate_tree(tokens: tuple[Token, ...], text: str) -> None:
    name = text if text else "<unnamed sentence>"
    if not tokens:
        raise TreeValidationError(f"sentence {name!r} has no tokens")
    for position, token in enumerate(tokens, start=1):
        if token.index != position:
            raise TreeValidationError(
                f"sentence {name!r}: token IDs must be 1..n in order, "
                f"found {token.index} at position {position}"
            )
    n = len(tokens)
    roots = [t.index for t in tokens if t.head == 0]
    if len(roots) != 1:
        raise TreeValidationError(
            f"sentence {name!r} must have exactly one root, found {len(roots)}"
        )
    for token in tokens:
        if token.head > n:
            raise TreeValidationError(
                f"sentence {name!r}: token {token.index} references head "
                f"{token.head}, but the sentence has {n} tokens"
            )
    reaches_root: set[int] = set()
    for token in tokens:
        trail = []
        current = token.index
        while current != 0 and current not in reaches_root:
            if current in trail:
                raise TreeValidationError(
                    f"sentence {name!r}: cycle through token {current}"
                )
            trail.append(current)
            current = tokens[current - 1].head
        reaches_root.update(trail)


def _as_line_iterator(source: str | TextIO | Iterable[str]) -> Iterator[str]:
    if isinstance(source, str):
        source = io.StringIO(source)
    return iter(source)


def read_conllu(source: str | TextIO | Iterable[str]) -> list[ParsedUtterance]:
    """Read every sentence block from a CoNLL-U stream, in file order.

    Raises ConlluParseError (with the offending line number) on malformed
    lines and TreeValidationError when a block is not a valid tree.
    """
    utterances: list[ParsedUtterance] = []
    tokens: list[Token] = []
    text: str | None = None

    def flush():
        nonlocal tokens, text
        if tokens:
            sentence_text = text if text is not None else " ".join(
                t.surface for t in tokens
            )
            utterances.append(
                ParsedUtterance(text=sentence_text, tokens=tuple(tokens))
            )
        tokens = []
        text = None

    for line_number, raw in enumerate(_as_line_iterator(source), start=1):
        line = raw.rstrip("\n").rstrip("\r")
        if not line.strip():
            flush()
            continue
        if line.startswith("#"):
            key, sep, value = line[1:].partition("=")
            if sep and key.strip() == "text":
                text = value.strip()
            continue
        fields = line.split("\t")
        if len(fields) != _COLUMNS:
            raise ConlluParseError(
                f"expected {_COLUMNS} tab-separated columns, got {len(fields)}",
                line_number,
            )
        token_id = fields[0]
        if "-" in token_id or "." in token_id:
            continue  # multiword range / empty node
        try:
            index = int(token_id)
        except ValueError:
            raise ConlluParseError(f"non-integer token ID {token_id!r}", line_number)
        try:
            head = int(fields[6])
        except ValueError:
            raise ConlluParseError(f"non-integer HEAD {fields[6]!r}", line_number)
        try:
            tokens.append(
                Token(
                    index=index,
                    surface=fields[1],
                    upos=fields[3],
                    head=head,
                    deprel=fields[7],
                )
            )
        except TreeValidationError as exc:
            raise ConlluParseError(str(exc), line_number)
    flush()
    return utterances


def write_conllu(utterance: ParsedUtterance) -> str:
    """Serialize one utterance to a canonical, blank-line-terminated block."""
    lines = [f"# text = {_normalize_cell(utterance.text).strip()}"]
    for token in utterance.tokens:
        lines.append(
            "\t".join(
                [
                    str(token.index),
                    _normalize_cell(token.surface),
                    "_",
                    token.upos,
                    "_",
                    "_",
                    str(token.head),
                    token.deprel,
                    "_",
                    "_",
                ]
            )
        )
    return "\n".join(lines) + "\n\n"


def write_conllu_file(utterances: Iterable[ParsedUtterance]) -> str:
    return "".join(write_conllu(u) for u in utterances)
