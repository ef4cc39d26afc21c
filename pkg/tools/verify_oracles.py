"""Scratch harness confirming hand-derived expected values before they are
frozen into the test suite. Not shipped; run from the repo root."""

from fractions import Fraction

from zberta.conllu import read_conllu
from zberta.dataset import (
    SamplerState,
    SplitMix64,
    build_entailed,
    build_negatives,
    extract_key_word,
)
from zberta.evaluation import (
    EmbeddingVector,
    ReferenceEmbedder,
    cosine,
    evaluate_discovery,
    fnv1a64,
    threshold,
)
from zberta.intents import generate_intents
from zberta.nli import (
    EntailmentJudgment,
    HypothesisTemplate,
    ReferenceScorer,
    classify,
)
from zberta.wordnet import GlossStore, LemmaLexicon, bundled_lexicon_dir

LEX = LemmaLexicon.from_dir(bundled_lexicon_dir())
GLOSS = GlossStore.from_dir(bundled_lexicon_dir())
EMB = ReferenceEmbedder(LEX)
SCORER = ReferenceScorer(LEX)


def sm64_reference(seed):
    """Independent SplitMix64 transcription from the published algorithm."""
    state = seed & 0xFFFFFFFFFFFFFFFF

    def nxt():
        nonlocal state
        state = (state + 0x9E3779B97F4A7C15) & 0xFFFFFFFFFFFFFFFF
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & 0xFFFFFFFFFFFFFFFF
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & 0xFFFFFFFFFFFFFFFF
        return z ^ (z >> 31)

    return nxt


print("== splitmix64 ==")
gen = SplitMix64(0)
mine = [gen.next_u64() for _ in range(3)]
ref = sm64_reference(0)
print("seed0 first3:", [hex(v) for v in mine])
print("matches independent transcription:", mine == [ref() for _ in range(3)])

print("\n== fnv1a64 ==")
print("empty:", hex(fnv1a64(b"")))
print("'a':", hex(fnv1a64(b"a")))
print("'card':", hex(fnv1a64(b"card")), "mod 256 =", fnv1a64(b"card") % 256)

print("\n== glosses ==")
for w in ("support", "delivery", "payment", "card", "retrieve", "bank"):
    print(f"{w!r}: {GLOSS.definition(w)!r}")

print("\n== lemmas ==")
for w, p in (("cards", "noun"), ("felt", "verb"), ("deliveries", "noun")):
    print(f"lemmatize({w!r},{p}) = {LEX.lemmatize(w, p)!r}")
for w in ("blocked", "deliveries", "running", "exchange", "I", "zzqx"):
    print(f"lemmatize_any({w!r}) = {LEX.lemmatize_any(w)!r}")

print("\n== reference scorer ==")
cases = [
    ("track my card delivery", "This example is track delivery."),
    ("track my card delivery", "This example is card support."),
    ("anything", "anything"),
    ("alpha bravo", "charlie delta"),
]
for prem, hyp in cases:
    j = SCORER.score(prem, [hyp])[0]
    print(f"{prem!r} / {hyp!r} -> ({j.p_entailment}, {j.p_neutral}, {j.p_contradiction})")

print("\n== classifier fractions ==")


class StubScorer:
    def __init__(self, judgments):
        self.judgments = judgments

    def score(self, premise, hypotheses):
        return self.judgments[: len(hypotheses)]


stub = StubScorer(
    [EntailmentJudgment(0.8, 0.1, 0.1), EntailmentJudgment(0.2, 0.4, 0.4)]
)


class FakeCand:
    def __init__(self, label):
        self._label = label

    def label(self):
        return self._label

    def phrase(self):
        return self._label.replace("-", " ")


pred = classify(
    "u", [FakeCand("track-delivery"), FakeCand("card-delivery")], stub,
    HypothesisTemplate("This example is {}."),
)
print("ranked:", pred.ranked)
f1 = Fraction(8, 10) / (Fraction(8, 10) + Fraction(1, 10))
f2 = Fraction(2, 10) / (Fraction(2, 10) + Fraction(4, 10))
tot = f1 + f2
print("fraction oracle:", float(f1 / tot), float(f2 / tot))
print(
    "match:",
    abs(pred.ranked[0][1] - float(f1 / tot)) < 1e-12,
    abs(pred.ranked[1][1] - float(f2 / tot)) < 1e-12,
)

print("\n== embedder / cosine ==")
v10 = EmbeddingVector((1.0, 0.0))
v11 = EmbeddingVector((1.0, 1.0))
print("cos((1,0),(1,1)) =", repr(cosine(v10, v11)))
print("cos(card delivery, delivery card) =", cosine(EMB.embed("card delivery"), EMB.embed("delivery card")))
print("cos(pin blocked, pin block) =", cosine(EMB.embed("pin blocked"), EMB.embed("pin block")))
print("cos(exchange rate, pin block) =", repr(cosine(EMB.embed("exchange rate"), EMB.embed("pin block"))))
for t in ("is it", "card card delivery"):
    print(f"norm({t!r}) =", EMB.embed(t).norm)

print("\n== threshold ==")
r = threshold([0.6, 0.8])
print("mu, sigma2, t:", repr(r.mu), repr(r.sigma2), repr(r.t))
r2 = threshold([0.4, 0.5, 0.6])
print("mu<=0.5 branch:", repr(r2.mu), repr(r2.t))

print("\n== evaluate_discovery table-7 pairs ==")
rep, breakdown = evaluate_discovery(
    [("exchange-rate", "exchange-rate"), ("pin-blocked", "pin-block")], EMB
)
print("report:", rep)
print("breakdown:", breakdown)

print("\n== negative sampling fixture ==")
pool = ["alpha", "bravo", "charlie", "delivery"]
gen13 = sm64_reference(13)
print("seed13 idx mod 4:", [gen13() % 4 for _ in range(8)])
negs = build_negatives(
    "card delivery?", 2, SamplerState(13, pool), GLOSS, key_word="card"
)
print("negatives:", [(n.key_word, n.hypothesis) for n in negs])

print("\n== key word ==")
for u in ("delivery of my delivery card", "card delivery?", "deliveries of my deliveries card", "support?"):
    print(f"{u!r} ->", extract_key_word(u, EMB, LEX))

print("\n== build_entailed ==")
ex = build_entailed("support?", EMB, GLOSS, LEX)
print(ex.key_word, "|", ex.hypothesis)

print("\n== intent fixtures ==")


def parse_rows(rows, text=None):
    forms = [r[1] for r in rows]
    lines = ["# text = " + (text or " ".join(forms))]
    for idx, form, upos, head, deprel in rows:
        lines.append(
            f"{idx}\t{form}\t_\t{upos}\t_\t_\t{head}\t{deprel}\t_\t_"
        )
    return read_conllu("\n".join(lines) + "\n\n")[0]


FIXTURES = {
    "track card delivery": [
        (1, "track", "VERB", 0, "root"),
        (2, "card", "NOUN", 3, "compound"),
        (3, "delivery", "NOUN", 1, "obj"),
    ],
    "my new card": [
        (1, "my", "PRON", 3, "nmod:poss"),
        (2, "new", "ADJ", 3, "amod"),
        (3, "card", "NOUN", 0, "root"),
    ],
    "I want to track my delivery": [
        (1, "I", "PRON", 2, "nsubj"),
        (2, "want", "VERB", 0, "root"),
        (3, "to", "PART", 4, "mark"),
        (4, "track", "VERB", 2, "xcomp"),
        (5, "my", "PRON", 6, "nmod:poss"),
        (6, "delivery", "NOUN", 4, "obj"),
    ],
    "exchange rate": [
        (1, "exchange", "NOUN", 2, "compound"),
        (2, "rate", "NOUN", 0, "root"),
    ],
    "report lost card": [
        (1, "report", "VERB", 0, "root"),
        (2, "lost", "ADJ", 3, "amod"),
        (3, "card", "NOUN", 1, "obj"),
    ],
    "lost or stolen card": [
        (1, "lost", "ADJ", 4, "amod"),
        (2, "or", "CCONJ", 3, "cc"),
        (3, "stolen", "ADJ", 1, "conj"),
        (4, "card", "NOUN", 0, "root"),
    ],
    "run jump fences !": [
        (1, "run", "VERB", 0, "root"),
        (2, "jump", "VERB", 1, "conj"),
        (3, "fences", "NOUN", 2, "nmod"),
        (4, "!", "PUNCT", 1, "punct"),
    ],
    "hello there": [
        (1, "hello", "INTJ", 0, "root"),
        (2, "there", "ADV", 1, "advmod"),
    ],
    "help": [(1, "help", "VERB", 0, "root")],
    "track deliveries": [
        (1, "track", "VERB", 0, "root"),
        (2, "deliveries", "NOUN", 1, "obj"),
    ],
    "card delivery?": [
        (1, "card", "NOUN", 2, "compound"),
        (2, "delivery", "NOUN", 0, "root"),
        (3, "?", "PUNCT", 2, "punct"),
    ],
    "track delivery track delivery": [
        (1, "track", "VERB", 0, "root"),
        (2, "delivery", "NOUN", 1, "obj"),
        (3, "track", "VERB", 1, "conj"),
        (4, "delivery", "NOUN", 3, "obj"),
    ],
    "I want new card": [
        (1, "I", "PRON", 2, "nsubj"),
        (2, "want", "VERB", 0, "root"),
        (3, "new", "ADJ", 4, "amod"),
        (4, "card", "NOUN", 2, "obj"),
    ],
}

for text, rows in FIXTURES.items():
    u = parse_rows(rows, text)
    cands = generate_intents(u, LEX)
    print(f"{text!r}: {[(c.action, c.object, c.provenance) for c in cands]}")
