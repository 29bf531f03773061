"""Classic readability formulas and the side-by-side comparison table."""
from dataclasses import dataclass
import math

from .corpus import format_grade
from .features import extract_all
from .model import evaluate_predictions, predict

MODELS = ("flesch_kincaid", "coleman_liau", "dale_chall", "lxper")
DISPLAY_NAMES = {
    "flesch_kincaid": "Flesch-Kincaid",
    "coleman_liau": "Coleman-Liau",
    "dale_chall": "Dale-Chall",
    "lxper": "LXPER",
}
DALE_CHALL_NOTE = "Dale-Chall is a raw score on its own scale, not a grade level."


def _counts(text):
    if text.sentence_count < 1 or text.word_count < 1:
        raise ValueError("formula needs at least one sentence and one word")
    return text.word_count, text.sentence_count


def flesch_kincaid_from_counts(words, sentences, syllables):
    return 0.39 * (words / sentences) + 11.8 * (syllables / words) - 15.59


def coleman_liau_from_counts(words, sentences, letters):
    L = 100.0 * letters / words
    S = 100.0 * sentences / words
    return 0.0588 * L - 0.296 * S - 15.8


def dale_chall_from_counts(words, sentences, difficult):
    pct = 100.0 * difficult / words
    score = 0.1579 * pct + 0.0496 * (words / sentences)
    if pct > 5:
        score += 3.6365
    return score


def flesch_kincaid(text):
    words, sentences = _counts(text)
    return flesch_kincaid_from_counts(words, sentences, text.syllable_total)


def coleman_liau(text):
    words, sentences = _counts(text)
    return coleman_liau_from_counts(words, sentences, text.letter_total)


def dale_chall(text, easy):
    if not len(easy):
        raise ValueError("easy-word list is empty")
    words, sentences = _counts(text)
    difficult = sum(1 for w in text.words if w.lower not in easy.words)
    return dale_chall_from_counts(words, sentences, difficult)


@dataclass(frozen=True)
class ComparisonRow:
    model: str
    by_grade: dict  # grade -> mean score
    avg_error: float | None
    skipped: int = 0


@dataclass(frozen=True)
class ComparisonTable:
    rows: tuple
    grades: tuple
    notes: tuple = ()

    def row(self, model):
        return next(r for r in self.rows if r.model == model)

    def _cells(self, r, digits):
        cells = [f"{r.by_grade[g]:.{digits}f}" if g in r.by_grade else "-" for g in self.grades]
        err = "-" if r.avg_error is None else f"{r.avg_error:.{digits}f}"
        return [DISPLAY_NAMES.get(r.model, r.model), *cells, err]

    def header(self):
        return ["Model", *(f"Gr {format_grade(g)}" for g in self.grades), "AvgEr"]

    def format_text(self, digits=3):
        rows = [self.header()] + [self._cells(r, digits) for r in self.rows]
        widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
        lines = ["  ".join(c.ljust(w) if i == 0 else c.rjust(w) for i, (c, w) in enumerate(zip(row, widths))).rstrip()
                 for row in rows]
        for r in self.rows:
            if r.skipped:
                lines.append(f"* {DISPLAY_NAMES.get(r.model, r.model)}: {r.skipped} text(s) skipped")
        lines.extend(f"* {n}" for n in self.notes)
        return "\n".join(lines)

    def format_tsv(self):
        lines = ["\t".join(["model", *(format_grade(g) for g in self.grades), "avg_error", "skipped"])]
        for r in self.rows:
            cells = [repr(r.by_grade[g]) if g in r.by_grade else "" for g in self.grades]
            err = "" if r.avg_error is None else repr(r.avg_error)
            lines.append("\t".join([r.model, *cells, err, str(r.skipped)]))
        return "\n".join(lines) + "\n"


def parse_comparison_tsv(text):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    head = lines[0].split("\t")
    if head[0] != "model" or head[-2:] != ["avg_error", "skipped"]:
        raise ValueError("not a comparison table")
    grades = tuple(float(g) for g in head[1:-2])
    rows = []
    for line in lines[1:]:
        parts = line.split("\t")
        by_grade = {g: float(v) for g, v in zip(grades, parts[1:-2]) if v}
        rows.append(ComparisonRow(parts[0], by_grade, float(parts[-2]) if parts[-2] else None, int(parts[-1])))
    return ComparisonTable(tuple(rows), grades)


def compare_models(items, model, easy, wordlist, resource):
    """Score every ``(grade, analyzed_text)`` item with the three formulas and ``model``.

    A text a scorer fails on is skipped for that scorer only.
    """
    scorers = {
        "flesch_kincaid": flesch_kincaid,
        "coleman_liau": coleman_liau,
        "dale_chall": lambda t: dale_chall(t, easy),
        "lxper": lambda t: predict(model, extract_all(t, wordlist, resource)),
    }
    grades = tuple(sorted({float(g) for g, _ in items}))
    rows = []
    for name in MODELS:
        preds, targets, skipped = [], [], 0
        for grade, text in items:
            try:
                score = scorers[name](text)
            except (ValueError, KeyError):
                skipped += 1
                continue
            if not math.isfinite(score):
                skipped += 1
                continue
            preds.append(score)
            targets.append(grade)
        if preds:
            ev = evaluate_predictions(preds, targets)
            rows.append(ComparisonRow(name, {g: v[0] for g, v in ev.by_grade.items()}, ev.avg_error, skipped))
        else:
            rows.append(ComparisonRow(name, {}, None, skipped))
    return ComparisonTable(tuple(rows), grades, (DALE_CHALL_NOTE,))
