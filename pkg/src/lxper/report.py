"""Per-paragraph document scoring in the ``paragraphN: score`` report layout."""
from dataclasses import dataclass
import math
import re
import statistics

from .features import extract_all
from .model import predict
from .textproc import annotate, segment_sentences, tokenize

HEADER = "LXPER Index"
_BLANK_LINE = re.compile(r"\n\s*\n")


def split_paragraphs(document):
    paragraphs = [p.strip() for p in _BLANK_LINE.split(document.replace("\r\n", "\n"))]
    return [p for p in paragraphs if p]


@dataclass(frozen=True)
class DocumentReport:
    scores: tuple  # (index, score or None)
    errors: dict  # index -> message

    @property
    def valid_scores(self):
        return [s for _, s in self.scores if s is not None]

    @property
    def average(self):
        vals = self.valid_scores
        return statistics.fmean(vals) if vals else math.nan

    @property
    def standard_dev(self):
        vals = self.valid_scores
        return statistics.pstdev(vals) if vals else math.nan

    def format(self, digits=None):
        def fmt(x):
            return repr(x) if digits is None else f"{x:.{digits}f}"

        lines = [HEADER]
        for idx, score in self.scores:
            if score is None:
                lines.append(f"paragraph{idx}:\terror: {self.errors[idx]}")
            else:
                lines.append(f"paragraph{idx}:\t{fmt(score)}")
        lines.append(f"average:\t{fmt(self.average)}")
        lines.append(f"standard dev.:\t{fmt(self.standard_dev)}")
        if self.errors:
            lines.append(f"# {len(self.errors)} paragraph(s) failed and were left out of the average")
        return "\n".join(lines) + "\n"


def score_document(model, document, wordlist, resource, trees=None):
    """Score each blank-line separated paragraph independently.

    ``trees`` optionally supplies one bracketed parse per sentence for the
    whole document, consumed paragraph by paragraph in order.
    """
    paragraphs = split_paragraphs(document)
    if not paragraphs:
        raise ValueError("document has no paragraphs")
    tree_iter = None if trees is None else iter(list(trees))
    scores, errors = [], {}
    for idx, para in enumerate(paragraphs, 1):
        try:
            para_trees = None
            if tree_iter is not None:
                para_trees = [t for t in (next(tree_iter, None) for _ in range(_sentence_count(para))) if t is not None]
            text = annotate(para, para_trees)
            scores.append((idx, predict(model, extract_all(text, wordlist, resource))))
        except (ValueError, KeyError) as e:
            scores.append((idx, None))
            errors[idx] = str(e).strip("'\"")
    return DocumentReport(tuple(scores), errors)


def _sentence_count(paragraph):
    # annotate merges word-less sentences into a neighbour; count the same way
    return sum(1 for s in segment_sentences(paragraph) if any(t.is_word for t in tokenize(s)))


_LINE = re.compile(r"^(paragraph(\d+)|average|standard dev\.):\t(.*)$")


def parse_report(text):
    """Read back the output of :meth:`DocumentReport.format`."""
    scores, errors = [], {}
    summary = {}
    for line in text.splitlines():
        m = _LINE.match(line)
        if not m:
            continue
        value = m.group(3)
        if m.group(2):
            idx = int(m.group(2))
            if value.startswith("error: "):
                scores.append((idx, None))
                errors[idx] = value[len("error: "):]
            else:
                scores.append((idx, float(value)))
        else:
            summary[m.group(1)] = float(value)
    report = DocumentReport(tuple(scores), errors)
    return report, summary
