"""Regenerate tests/data/roundtrip_50.conllu.

Fifty synthetic sentences with varied shapes: random tree structure
(always single-rooted and acyclic), mixed POS tags and relations,
punctuation, digits, hyphenated and non-ASCII surfaces. Run from the
repository root:

    python3 tools/gen_roundtrip_fixture.py
"""

from __future__ import annotations

import random
from pathlib import Path

OUT_PATH = Path(__file__).resolve().parent.parent / "tests" / "data" / "roundtrip_50.conllu"

WORDS = [
    ("track", "VERB"), ("card", "NOUN"), ("delivery", "NOUN"), ("rate", "NOUN"),
    ("exchange", "NOUN"), ("pin", "NOUN"), ("blocked", "VERB"), ("new", "ADJ"),
    ("lost", "ADJ"), ("my", "PRON"), ("I", "PRON"), ("want", "VERB"),
    ("to", "PART"), ("the", "DET"), ("a", "DET"), ("support", "NOUN"),
    ("payment", "NOUN"), ("help", "VERB"), ("報告", "NOUN"), ("café", "NOUN"),
    ("pin-blocked", "ADJ"), ("42", "NUM"), ("quickly", "ADV"), ("and", "CCONJ"),
    ("transfer", "VERB"), ("account", "NOUN"), ("fee", "NOUN"), ("refund", "NOUN"),
]
PUNCT = [("?", "PUNCT"), ("!", "PUNCT"), (".", "PUNCT"), (",", "PUNCT")]
RELATIONS = [
    "obj", "dobj", "amod", "compound", "nsubj", "det", "advmod", "nmod",
    "case", "mark", "cc", "conj", "xcomp",
]


def build_sentence(rng: random.Random) -> list[str]:
    n = rng.randint(1, 9)
    tokens = [rng.choice(WORDS) for _ in range(n)]
    if n > 2 and rng.random() < 0.6:
        tokens[-1] = rng.choice(PUNCT)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    heads = {order[0]: 0}
    for position in range(1, n):
        heads[order[position]] = order[rng.randrange(position)]
    lines = ["# text = " + " ".join(surface for surface, _ in tokens)]
    for index, (surface, upos) in enumerate(tokens, start=1):
        if heads[index] == 0:
            deprel = "root"
        elif upos == "PUNCT":
            deprel = "punct"
        else:
            deprel = rng.choice(RELATIONS)
        lines.append(
            f"{index}\t{surface}\t_\t{upos}\t_\t_\t{heads[index]}\t{deprel}\t_\t_"
        )
    return lines


def main() -> None:
    rng = random.Random(20260814)
    blocks = []
    for _ in range(50):
        # canonical block shape: token lines then exactly one blank line
        blocks.append("\n".join(build_sentence(rng)) + "\n\n")
    OUT_PATH.parent.mkdir(parents=True, exist_ok=True)
    OUT_PATH.write_text("".join(blocks), encoding="utf-8")
    print(f"wrote {OUT_PATH}")


if __name__ == "__main__":
    main()
