"""Seeded synthetic graded corpus, word list and relation resource.

Stands in for the proprietary curriculum corpora in tests and demos.
Content words are pronounceable pseudo-words assigned to levels A-F with
the same length distribution at every level, so surface formulas see no
vocabulary signal. Two knobs vary with grade:

* the share of content words drawn from harder levels rises monotonically;
* clause count per sentence peaks at grade 9 and wobbles above it, so
  words-per-sentence is *not* monotone in grade.

The generator uses only :class:`random.Random` seeded by the caller, so the
same seed always reproduces byte-identical files.
"""
from dataclasses import dataclass
import json
import math
from pathlib import Path
import random

from .corpus import LEVELS
from .textproc.tagger import LEXICON, SUBORDINATORS

GRADES = (7.0, 8.0, 9.0, 10.0, 11.0, 12.0, 12.5)
CLAUSE_RATE = {7.0: 0.7, 8.0: 1.0, 9.0: 1.6, 10.0: 1.1, 11.0: 1.4, 12.0: 1.2, 12.5: 1.3}
PREPOSITIONS = ("in", "on", "with", "near", "under", "from")
SUBORDINATE_OPENERS = ("because", "although", "when")

_ONSETS = "b d f g k l m n p r t v z".split()
_VOWELS = "a e i o u".split()
_CODAS = "m n r l k t".split()
_BAD_ENDINGS = ("s", "ly", "ed", "ing", "ic", "est", "ness", "ment", "tion", "sion", "ity",
                "ous", "ful", "ive", "able", "ible", "less", "ize", "ise", "e", "y")


@dataclass(frozen=True)
class SyntheticSpec:
    seed: int = 20201
    texts_per_grade: int = 40
    sentences: tuple = (9, 13)
    nouns_per_level: int = 40
    adjectives_per_level: int = 12
    verbs_per_level: int = 12
    names: int = 30


def _stem(rng, syllables):
    parts = [rng.choice(_ONSETS) + rng.choice(_VOWELS) for _ in range(syllables)]
    return "".join(parts) + rng.choice(_CODAS)


def _fresh(rng, used, syllables, suffix=""):
    while True:
        stem = _stem(rng, syllables())
        w = stem + suffix
        if w in used or stem in LEXICON or stem in SUBORDINATORS or stem.endswith(_BAD_ENDINGS):
            continue
        used.add(w)
        return w


def build_vocabulary(spec, rng):
    def syl():
        return rng.choice((1, 1, 2, 2, 2, 3))

    used = set()
    vocab = {}
    for level in LEVELS:
        nouns = [_fresh(rng, used, syl) for _ in range(spec.nouns_per_level)]
        adjs = [_fresh(rng, used, syl, "ous") for _ in range(spec.adjectives_per_level)]
        verbs = [_fresh(rng, used, syl, "ed") for _ in range(spec.verbs_per_level)]
        vocab[level] = {"noun": nouns, "adj": adjs, "verb": verbs}
    names = [_fresh(rng, used, lambda: 2).capitalize() for _ in range(spec.names)]
    return vocab, names


def level_weights(grade):
    """Level A-F sampling weights centred on a grade-dependent level."""
    centre = 0.3 + 4.4 * (grade - 7.0) / 5.5
    return [math.exp(-((i - centre) ** 2) / 1.2) for i in range(len(LEVELS))]


class _TextWriter:
    def __init__(self, rng, vocab, names, grade):
        self.rng = rng
        self.vocab = vocab
        self.names = names
        self.weights = level_weights(grade)
        self.clause_rate = CLAUSE_RATE[grade]
        self.topic = [self._content("noun") for _ in range(4)]

    def _content(self, pos):
        level = self.rng.choices(LEVELS, self.weights)[0]
        return self.rng.choice(self.vocab[level][pos])

    def _noun(self):
        if self.rng.random() < 0.45:
            return self.rng.choice(self.topic)
        return self._content("noun")

    def _np(self):
        if self.rng.random() < 0.08:
            return [self.rng.choice(self.names)]
        words = [self.rng.choice(("the", "a", "this", "every"))]
        if self.rng.random() < 0.4:
            words.append(self._content("adj"))
        words.append(self._noun())
        return words

    def _clause(self):
        return self._np() + [self._content("verb")] + self._np()

    def sentence(self):
        words = self._clause()
        extra = self.rng.random() * 2 * self.clause_rate
        while extra >= 1:
            if self.rng.random() < 0.5:
                words += [self.rng.choice(PREPOSITIONS)] + self._np()
            else:
                words += [self.rng.choice(SUBORDINATE_OPENERS)] + self._clause()
            extra -= 1
        if extra > 0.5:
            words += [self.rng.choice(PREPOSITIONS)] + self._np()
        words[0] = words[0][0].upper() + words[0][1:]
        return " ".join(words) + "."


def _source(grade):
    if grade == 12.5:
        return "exam"
    return "textbook" if grade <= 9 else "mock_test"


def generate(spec=SyntheticSpec()):
    """Returns ``(records, wordlist_rows, relation_lines)``."""
    rng = random.Random(spec.seed)
    vocab, names = build_vocabulary(spec, rng)
    records = []
    for grade in GRADES:
        for k in range(spec.texts_per_grade):
            writer = _TextWriter(rng, vocab, names, grade)
            n = rng.randint(*spec.sentences)
            text = " ".join(writer.sentence() for _ in range(n))
            gid = str(int(grade)) if grade.is_integer() else str(grade).replace(".", "_")
            records.append({
                "id": f"syn-g{gid}-{k:03d}",
                "grade": int(grade) if grade.is_integer() else grade,
                "source": _source(grade),
                "text": text,
            })

    rows = []
    for word in sorted({w for w in LEXICON} | set(PREPOSITIONS) | set(SUBORDINATE_OPENERS) | {"the", "a"}):
        rows.append((word, "A"))
    for level in LEVELS:
        for pos in ("noun", "adj", "verb"):
            rows.extend((w, level) for w in vocab[level][pos])
    rows.extend((n.lower(), "U") for n in names)
    rows.sort()

    relations = []
    all_nouns = [w for level in LEVELS for w in vocab[level]["noun"]]
    pool = list(all_nouns)
    rng.shuffle(pool)
    for i in range(0, 40, 2):
        relations.append(f"syn:{pool[i]},{pool[i + 1]}")
    for i in range(40, 80, 2):
        relations.append(f"hyp:{pool[i]}\t{pool[i + 1]}")
    return records, rows, relations


def write_synthetic(directory, spec=SyntheticSpec()):
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    records, rows, relations = generate(spec)
    with open(directory / "corpus.jsonl", "w", encoding="utf-8", newline="\n") as fh:
        for rec in records:
            fh.write(json.dumps(rec, ensure_ascii=False) + "\n")
    with open(directory / "wordlist.tsv", "w", encoding="utf-8", newline="\n") as fh:
        fh.writelines(f"{w}\t{lv}\n" for w, lv in rows)
    with open(directory / "relations.txt", "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"# synthetic relation resource, seed {spec.seed}\n")
        fh.writelines(line + "\n" for line in relations)
    return directory
