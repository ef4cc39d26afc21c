"""Regenerate the bundled lexicon under src/zberta/data/wordnet_mini/.

The output follows the Princeton WordNet 3.0 database layout: index.{pos}
and {pos}.exc for all four POS files, plus data.noun and data.verb carrying
glosses. Offsets are synthetic but internally consistent between index and
data files. Run from the repository root:

    python3 tools/gen_wordnet_mini.py
"""

from __future__ import annotations

from pathlib import Path

OUT_DIR = Path(__file__).resolve().parent.parent / "src" / "zberta" / "data" / "wordnet_mini"

HEADER = (
    "  1 This file is a compact English lexicon in the Princeton WordNet 3.0\n"
    "  2 database format. It is generated by tools/gen_wordnet_mini.py;\n"
    "  3 regenerate it with that script instead of editing by hand.\n"
)

# Glosses follow the conventions of the full database: an optional quoted
# example after '; "' and occasional parenthesized asides, both of which
# the gloss store strips.
NOUN_GLOSSES: dict[str, list[str]] = {
    "account": ["a formal contractual relationship established to provide for regular banking or brokerage or business services"],
    "act": ["something that people do or cause to happen"],
    "activity": ["any specific behavior"],
    "address": ["the place where a person or organization can be found or communicated with"],
    "airport": ["an airfield equipped with control tower and hangars as well as accommodations for passengers and cargo"],
    "alpha": ["the 1st letter of the Greek alphabet"],
    "answer": ["a statement that is made in reply to a question or request"],
    "atm": ["an unattended machine that dispenses money when a personal coded card is used"],
    "balance": ["the difference between the totals of the credit and debit sides of an account"],
    "bank": [
        'a financial institution that accepts deposits and channels the money into lending activities; "he cashed a check at the bank"',
        'sloping land (especially the slope beside a body of water); "they pulled the canoe up on the bank"',
    ],
    "block": ["a solid piece of something (usually having flat rectangular sides)"],
    "box": ["a (usually rectangular) container; may have a lid"],
    "branch": ["a division of some larger or more complex organization"],
    "bravo": ["a cry of approval as from an audience at the end of great performance"],
    "card": [
        'one of a set of small pieces of stiff paper marked in various ways and used for playing games or for telling fortunes; "he collected cards and traded them with the other boys"',
        "a written or printed message of sympathy or greeting",
    ],
    "cart": ["a heavy open wagon usually having two wheels and drawn by an animal"],
    "cash": ["money in the form of bills or coins"],
    "charge": ["the price charged for some article or service"],
    "charlie": ["a code word for the letter c used in radio communication"],
    "child": ["a young person of either sex"],
    "church": ["one of the groups of Christians who have their own beliefs and forms of worship"],
    "city": ["a large and densely populated urban area; may include several independent administrative districts"],
    "claim": ["an assertion of a right (as to money or property)"],
    "cost": ["the total spent for goods or services including money and time and labor"],
    "country": ["a politically organized body of people under a single government"],
    "currency": ["the metal or paper medium of exchange that is presently used"],
    "day": ["time for Earth to make a complete rotation on its axis"],
    "delivery": [
        'the act of delivering or distributing something (as goods or mail); "his reluctant delivery of bad news"',
    ],
    "exchange": ["the act of changing one thing for another thing"],
    "family": ["a social unit living together"],
    "fee": ["a fixed charge for a privilege or for professional services"],
    "fence": ["a barrier that serves to enclose an area"],
    "foot": ["the part of the leg of a human being below the ankle joint"],
    "goods": ["articles of commerce"],
    "hello": ["an expression of greeting"],
    "help": ["the activity of contributing to the fulfillment of a need or furtherance of an effort or purpose"],
    "holiday": ["leisure time away from work devoted to rest or pleasure"],
    "intent": ["an anticipated outcome that is intended or that guides your planned actions"],
    "limit": ["the greatest possible degree of something"],
    "loan": ["the temporary provision of money (usually at interest)"],
    "mail": ["the bags of letters and packages that are transported by the postal service"],
    "man": ["an adult person who is male (as opposed to a woman)"],
    "money": ["the most common medium of exchange; functions as legal tender"],
    "month": ["one of the twelve divisions of the calendar year"],
    "mouse": ["any of numerous small rodents typically resembling diminutive rats"],
    "name": ["a language unit by which a person or thing is known"],
    "necessity": ["anything indispensable"],
    "news": ["information about recent and important events"],
    "number": ["a concept of quantity involving zero and units"],
    "order": ["a commercial document used to request someone to supply something in return for payment"],
    "payment": ["a sum of money paid or a claim discharged"],
    "phone": ["electronic equipment that converts sound into electrical signals that can be transmitted over distances"],
    "pin": ["a small slender (often pointed) piece of wood or metal used to support or fasten or attach things"],
    "price": ["the property of having material worth (often indicated by the amount of money something would bring if sold)"],
    "problem": ["a state of difficulty that needs to be resolved"],
    "question": ["an instance of questioning"],
    "rate": ["a magnitude or frequency relative to a time unit"],
    "refund": ["money returned to a payer"],
    "report": ["a written document describing the findings of some individual or group"],
    "result": ["a phenomenon that follows and is caused by some previous phenomenon"],
    "service": ["work done by one person or group that benefits another"],
    "shop": ["a mercantile establishment for the retail sale of goods or services"],
    "statement": ["a document showing credits and debits"],
    "store": ["a supply of something available for future use"],
    "sum": ["a quantity of money"],
    "support": [
        'the activity of providing for or maintaining by supplying with necessities; "his support kept the family together"; "they gave him emotional support during difficult times"',
    ],
    "team": ["a cooperative unit (especially in sports)"],
    "ticket": ["a commercial document showing that the holder is entitled to something (as to ride on public transportation or to enter a public entertainment)"],
    "time": ["an instance or single occasion for some event"],
    "tooth": ["hard bonelike structures in the jaws of vertebrates"],
    "track": ["a line or route along which something travels or moves"],
    "transfer": ["the act of moving something from one location to another"],
    "travel": ["the act of going from one place to another"],
    "value": ["a numerical quantity measured or assigned or computed"],
    "week": ["any period of seven consecutive days"],
    "wish": ["a specific feeling of desire"],
    "wolf": ["any of various predatory carnivorous canine mammals of North America and Eurasia"],
    "woman": ["an adult female person (as opposed to a man)"],
    "word": ["a unit of language that native speakers can identify"],
    "year": ["a period of time containing 365 (or 366) days"],
}

VERB_GLOSSES: dict[str, list[str]] = {
    "ask": ["inquire about"],
    "be": ["have the quality of being (copula, used with an adjective or a predicate noun)"],
    "block": ["render unsuitable for passage"],
    "call": ["get or try to get into communication (with someone) by telephone"],
    "cancel": ["declare null and void; make ineffective"],
    "charge": ["demand payment"],
    "claim": ["assert or affirm strongly"],
    "close": ["move so that an opening or passage is obstructed; make shut"],
    "come": ["move toward, travel toward something or somebody or approach something or somebody"],
    "deliver": ["bring to a destination, make a delivery"],
    "discharge": ["free from obligations or duties"],
    "distribute": ["administer or bestow, as in small portions"],
    "do": ["engage in"],
    "exchange": ["give to, and receive from, one another"],
    "feel": ["undergo an emotional sensation or be in a particular state of mind"],
    "find": ["come upon, as if by accident; meet with"],
    "get": ["come into the possession of something concrete or abstract"],
    "give": ["transfer possession of something concrete or abstract to somebody"],
    "go": ["change location; move, travel, or proceed"],
    "help": ["give help or assistance; be of service"],
    "hold": ["keep in a certain state, position, or activity"],
    "jump": ["move forward by leaps and bounds"],
    "keep": ["retain possession of"],
    "know": ["be cognizant or aware of a fact or a specific piece of information"],
    "leave": ["go away from a place"],
    "lose": ["fail to keep or to maintain; cease to have, either physically or in an abstract sense"],
    "maintain": ["keep in a certain state, position, or activity"],
    "make": ["engage in"],
    "open": ["cause to open or to become open"],
    "pay": ["give money, usually in exchange for goods or services"],
    "provide": ["give something useful or necessary to"],
    "pull": ["cause to move by pulling"],
    "push": ["move with force"],
    "report": ["make known to the authorities"],
    "retrieve": ["get or find back; recover the use of"],
    "run": ["move fast by using one's feet, with one foot off the ground at any given time"],
    "say": ["express in words"],
    "see": ["perceive by sight or have the power to perceive by sight"],
    "send": ["cause to go somewhere"],
    "steal": ["take without the owner's consent"],
    "supply": ["give something useful or necessary to"],
    "support": ["give moral or psychological support, aid, or courage to"],
    "take": ["get into one's hands, take physically"],
    "tell": ["narrate or give a detailed account of"],
    "think": ["judge or regard; look upon; judge"],
    "track": ["carry on the feet and deposit"],
    "transfer": ["move from one place to another"],
    "use": ["put into service; make work or employ for a particular purpose"],
    "want": ["feel or have a desire for; want strongly"],
    "work": ["exert oneself by doing mental or physical work for a purpose or out of necessity"],
}

ADJ_LEMMAS = [
    "bad", "big", "early", "empty", "extra", "fast", "free", "full", "good",
    "happy", "high", "last", "late", "lost", "low", "new", "online", "open",
    "right", "slow", "small", "virtual", "wrong",
]

ADV_LEMMAS = [
    "abroad", "always", "away", "back", "fast", "here", "never", "now",
    "overseas", "soon", "there", "today", "tomorrow", "well",
]

NOUN_EXC = {
    "children": "child",
    "feet": "foot",
    "men": "man",
    "mice": "mouse",
    "teeth": "tooth",
    "women": "woman",
}

VERB_EXC = {
    "are": "be",
    "been": "be",
    "came": "come",
    "did": "do",
    "done": "do",
    "felt": "feel",
    "found": "find",
    "gone": "go",
    "got": "get",
    "gotten": "get",
    "held": "hold",
    "is": "be",
    "kept": "keep",
    "knew": "know",
    "known": "know",
    "left": "leave",
    "lost": "lose",
    "made": "make",
    "paid": "pay",
    "ran": "run",
    "running": "run",
    "said": "say",
    "saw": "see",
    "seen": "see",
    "sent": "send",
    "stolen": "steal",
    "taken": "take",
    "thought": "think",
    "told": "tell",
    "took": "take",
    "was": "be",
    "went": "go",
    "were": "be",
}

ADJ_EXC = {
    "better": "good",
    "best": "good",
    "bigger": "big",
    "biggest": "big",
    "worse": "bad",
    "worst": "bad",
}

ADV_EXC = {
    "better": "well",
    "best": "well",
}

POS_CODES = {"noun": "n", "verb": "v", "adj": "a", "adv": "r"}
LEX_FILE_NUM = {"noun": "06", "verb": "31", "adj": "00", "adv": "02"}


def assign_offsets(glosses: dict[str, list[str]]) -> dict[str, list[str]]:
    offsets: dict[str, list[str]] = {}
    cursor = 1740
    for lemma in sorted(glosses):
        offsets[lemma] = []
        for _ in glosses[lemma]:
            offsets[lemma].append(f"{cursor:08d}")
            cursor += 61
    return offsets


def index_lines(pos: str, offsets: dict[str, list[str]]) -> str:
    code = POS_CODES[pos]
    lines = [HEADER]
    for lemma in sorted(offsets):
        offs = offsets[lemma]
        n = len(offs)
        lines.append(f"{lemma} {code} {n} 0 {n} {n} {' '.join(offs)}\n")
    return "".join(lines)


def data_lines(pos: str, glosses: dict[str, list[str]], offsets: dict[str, list[str]]) -> str:
    code = POS_CODES[pos]
    lex = LEX_FILE_NUM[pos]
    lines = [HEADER]
    for lemma in sorted(glosses):
        for gloss, offset in zip(glosses[lemma], offsets[lemma]):
            lines.append(f"{offset} {lex} {code} 01 {lemma} 0 000 | {gloss}\n")
    return "".join(lines)


def exc_lines(exceptions: dict[str, str]) -> str:
    lines = [HEADER]
    for inflected in sorted(exceptions):
        lines.append(f"{inflected} {exceptions[inflected]}\n")
    return "".join(lines)


def main() -> None:
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    noun_offsets = assign_offsets(NOUN_GLOSSES)
    verb_offsets = assign_offsets(VERB_GLOSSES)
    adj_offsets = assign_offsets({lemma: [""] for lemma in ADJ_LEMMAS})
    adv_offsets = assign_offsets({lemma: [""] for lemma in ADV_LEMMAS})

    files = {
        "index.noun": index_lines("noun", noun_offsets),
        "index.verb": index_lines("verb", verb_offsets),
        "index.adj": index_lines("adj", adj_offsets),
        "index.adv": index_lines("adv", adv_offsets),
        "data.noun": data_lines("noun", NOUN_GLOSSES, noun_offsets),
        "data.verb": data_lines("verb", VERB_GLOSSES, verb_offsets),
        "noun.exc": exc_lines(NOUN_EXC),
        "verb.exc": exc_lines(VERB_EXC),
        "adj.exc": exc_lines(ADJ_EXC),
        "adv.exc": exc_lines(ADV_EXC),
    }
    for name, text in files.items():
        (OUT_DIR / name).write_text(text, encoding="utf-8")
        print(f"wrote {OUT_DIR / name}")


if __name__ == "__main__":
    main()
