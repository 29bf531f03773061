"""Graded text corpus, graded word list and easy-word list."""
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
import json
import logging
import random

log = logging.getLogger(__name__)

MIN_GRADE, MAX_GRADE = 7.0, 12.5
SOURCES = ("exam", "textbook", "mock_test", "other")
LEVELS = ("A", "B", "C", "D", "E", "F")
UNCLASSIFIED = "U"


class CorpusError(ValueError):
    pass


@dataclass(frozen=True)
class GradedText:
    id: str
    grade: float
    source: str
    text: str

    def __post_init__(self):
        if not self.id:
            raise CorpusError("text id must be non-empty")
        if not MIN_GRADE <= self.grade <= MAX_GRADE:
            raise CorpusError(f"text {self.id!r}: grade {self.grade} outside [{MIN_GRADE}, {MAX_GRADE}]")
        if self.source not in SOURCES:
            raise CorpusError(f"text {self.id!r}: unknown source {self.source!r}")
        if not self.text.strip():
            raise CorpusError(f"text {self.id!r}: empty text")


@dataclass(frozen=True)
class GradedTextCorpus:
    texts: tuple
    name: str = ""

    def __post_init__(self):
        seen = set()
        for t in self.texts:
            if t.id in seen:
                raise CorpusError(f"duplicate text id {t.id!r}")
            seen.add(t.id)

    @property
    def counts_by_grade(self):
        return dict(sorted(Counter(t.grade for t in self.texts).items()))

    @property
    def grades(self):
        return [t.grade for t in self.texts]

    def by_grade(self):
        out = {}
        for t in self.texts:
            out.setdefault(t.grade, []).append(t)
        return dict(sorted(out.items()))

    def __len__(self):
        return len(self.texts)

    def __iter__(self):
        return iter(self.texts)


def format_grade(grade):
    return str(int(grade)) if float(grade).is_integer() else str(grade)


def _parse_record(obj, lineno):
    if not isinstance(obj, dict):
        raise CorpusError(f"line {lineno}: expected a JSON object")
    missing = [k for k in ("id", "grade", "source", "text") if k not in obj]
    if missing:
        raise CorpusError(f"line {lineno}: missing field(s) {', '.join(missing)}")
    grade = obj["grade"]
    if isinstance(grade, bool) or not isinstance(grade, (int, float, str)):
        raise CorpusError(f"line {lineno}: grade must be a number")
    try:
        grade = float(grade)
    except ValueError:
        raise CorpusError(f"line {lineno}: grade {obj['grade']!r} is not a number") from None
    try:
        return GradedText(str(obj["id"]), grade, str(obj["source"]), str(obj["text"]))
    except CorpusError as e:
        raise CorpusError(f"line {lineno}: {e}") from None


def load_text_corpus(path):
    """Read a JSON-lines corpus: one ``{"id", "grade", "source", "text"}`` per line."""
    texts = []
    seen = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as e:
                raise CorpusError(f"line {lineno}: malformed record ({e.msg})") from None
            rec = _parse_record(obj, lineno)
            if rec.id in seen:
                raise CorpusError(f"line {lineno}: duplicate id {rec.id!r} (first on line {seen[rec.id]})")
            seen[rec.id] = lineno
            texts.append(rec)
    return GradedTextCorpus(tuple(texts), name=str(path))


def dump_text_corpus(corpus, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for t in corpus.texts:
            grade = int(t.grade) if t.grade.is_integer() else t.grade
            rec = {"id": t.id, "grade": grade, "source": t.source, "text": t.text}
            fh.write(json.dumps(rec, ensure_ascii=False) + "\n")


@dataclass(frozen=True)
class GradedWordList:
    entries: dict
    unclassified: frozenset = frozenset()

    def __post_init__(self):
        overlap = self.unclassified & self.entries.keys()
        if overlap:
            raise CorpusError(f"words both leveled and unclassified: {sorted(overlap)[:5]}")
        for word, level in self.entries.items():
            if level not in LEVELS:
                raise CorpusError(f"word {word!r}: unknown level {level!r}")

    def level(self, word):
        return self.entries.get(word.lower())

    def __len__(self):
        return len(self.entries) + len(self.unclassified)


def _check_word(word, lineno):
    if not word or any(c.isspace() for c in word):
        raise CorpusError(f"line {lineno}: word must be non-empty with no whitespace")
    return word.lower()


def load_word_list(path):
    """Read ``word<TAB>level`` lines; level ``A``-``F`` or ``U`` for unclassified.

    A word listed twice keeps its last level and logs a warning.
    """
    entries = {}
    unclassified = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\r\n")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise CorpusError(f"line {lineno}: expected word<TAB>level")
            word = _check_word(parts[0].strip(), lineno)
            level = parts[1].strip().upper()
            if level not in LEVELS and level != UNCLASSIFIED:
                raise CorpusError(f"line {lineno}: unknown level {parts[1].strip()!r}")
            if word in entries or word in unclassified:
                old = entries.get(word, UNCLASSIFIED)
                log.warning("line %d: %r relisted (%s -> %s), keeping the later level", lineno, word, old, level)
                entries.pop(word, None)
                unclassified.discard(word)
            if level == UNCLASSIFIED:
                unclassified.add(word)
            else:
                entries[word] = level
    return GradedWordList(entries, frozenset(unclassified))


def dump_word_list(wordlist, path):
    rows = sorted(wordlist.entries.items()) + [(w, UNCLASSIFIED) for w in sorted(wordlist.unclassified)]
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for word, level in rows:
            fh.write(f"{word}\t{level}\n")


@dataclass(frozen=True)
class EasyWordList:
    words: frozenset

    def __contains__(self, word):
        return word.lower() in self.words

    def __len__(self):
        return len(self.words)


def load_easy_words(path=None):
    """One word per line. ``None`` loads the small bundled list."""
    if path is None:
        text = resources.files("lxper.data").joinpath("easy_words.txt").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    words = frozenset(
        w.strip().lower() for w in text.splitlines() if w.strip() and not w.startswith("#")
    )
    return EasyWordList(words)


@dataclass(frozen=True)
class GradeSummary:
    texts: int
    words: int
    sentences: int

    @property
    def aWPT(self):
        return self.words / self.texts

    @property
    def aSPT(self):
        return self.sentences / self.texts

    @property
    def aWPS(self):
        return self.words / self.sentences


@dataclass(frozen=True)
class CorpusSummary:
    by_grade: dict
    overall: GradeSummary = field(repr=False)

    def columns(self):
        cols = [(f"Gr {format_grade(g)}", s) for g, s in self.by_grade.items()]
        return cols + [("All", self.overall)]

    def format_table(self, digits=3):
        cols = self.columns()
        header = ["Description"] + [name for name, _ in cols]
        lines = ["\t".join(header)]
        for stat in ("aWPT", "aSPT", "aWPS"):
            lines.append("\t".join([stat] + [f"{getattr(s, stat):.{digits}f}" for _, s in cols]))
        return "\n".join(lines)


def summarize_corpus(corpus, analyze):
    """Per-grade and pooled words/text, sentences/text and words/sentence.

    ``analyze`` maps a :class:`GradedText` to an analyzed text exposing
    ``word_count`` and ``sentence_count``. Words per sentence is computed
    from pooled totals, not averaged per text.
    """
    if not len(corpus):
        raise CorpusError("cannot summarize an empty corpus")
    totals = {}
    for t in corpus.texts:
        a = analyze(t)
        n, w, s = totals.get(t.grade, (0, 0, 0))
        totals[t.grade] = (n + 1, w + a.word_count, s + a.sentence_count)
    by_grade = {g: GradeSummary(*totals[g]) for g in sorted(totals)}
    overall = GradeSummary(*(sum(v[i] for v in totals.values()) for i in range(3)))
    return CorpusSummary(by_grade, overall)


def split_corpus(corpus, test_fraction, seed):
    """Stratified, seeded train/test split.

    Each grade bucket contributes ``round(n * test_fraction)`` texts to the
    test half, clamped so both halves keep at least one text. Original order
    is preserved inside each half.
    """
    if not 0 < test_fraction < 1:
        raise CorpusError(f"test fraction must lie in (0, 1), got {test_fraction}")
    rng = random.Random(seed)
    test_ids = set()
    for grade, texts in corpus.by_grade().items():
        if len(texts) < 2:
            raise CorpusError(
                f"grade {format_grade(grade)} has a single text; merge it into a neighbouring grade or exclude it"
            )
        k = min(max(round(len(texts) * test_fraction), 1), len(texts) - 1)
        test_ids.update(t.id for t in rng.sample(texts, k))
    train = tuple(t for t in corpus.texts if t.id not in test_ids)
    test = tuple(t for t in corpus.texts if t.id in test_ids)
    return GradedTextCorpus(train, corpus.name + ":train"), GradedTextCorpus(test, corpus.name + ":test")
