"""Pearson-based feature selection: significance filter, collinearity pruning, ranking."""
from dataclasses import dataclass
from itertools import combinations
import math

import numpy as np

from .features import CODE_INDEX, FEATURE_CODES

SIG_THRESHOLD = 0.05
PAIR_THRESHOLD = 0.85


def pearson(x, y):
    """Product-moment correlation, two-pass mean-centred."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError(f"length mismatch: {x.shape} vs {y.shape}")
    if len(x) < 3:
        raise ValueError("need at least 3 paired observations")
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = float(dx @ dx)
    syy = float(dy @ dy)
    if sxx == 0.0 or syy == 0.0:
        raise ValueError("zero variance")
    r = float(dx @ dy) / math.sqrt(sxx * syy)
    return max(-1.0, min(1.0, r))


@dataclass(frozen=True)
class CorrelationReport:
    r: dict
    sample_count: int | None  # None for precomputed tables
    degenerate: frozenset = frozenset()

    def __getitem__(self, code):
        return self.r[code]


def _columns(matrix, codes):
    return {c: np.array([row[c] for row in matrix], dtype=float) for c in codes}


def correlate_features(matrix, grades, codes=FEATURE_CODES):
    """Correlation of each feature column with the grade labels.

    A constant feature gets ``r = 0`` and is listed in ``degenerate``.
    """
    if len(matrix) != len(grades):
        raise ValueError(f"{len(matrix)} feature rows but {len(grades)} grades")
    if len(grades) < 3:
        raise ValueError("need at least 3 texts")
    cols = _columns(matrix, codes)
    r, degenerate = {}, set()
    for c in codes:
        try:
            r[c] = pearson(cols[c], grades)
        except ValueError:
            if np.ptp(cols[c]) != 0:
                raise
            r[c] = 0.0
            degenerate.add(c)
    return CorrelationReport(r, len(grades), frozenset(degenerate))


def significance_filter(report, threshold=SIG_THRESHOLD):
    """Codes whose |r| with grade is strictly above ``threshold``."""
    return [c for c in report.r if abs(report.r[c]) > threshold and c not in report.degenerate]


def pair_correlations(matrix, codes):
    """Pairwise r between feature columns; a constant column correlates 0."""
    cols = _columns(matrix, codes)
    out = {}
    for a, b in combinations(codes, 2):
        try:
            out[(a, b)] = pearson(cols[a], cols[b])
        except ValueError:
            out[(a, b)] = 0.0
    return out


@dataclass(frozen=True)
class Exclusion:
    reason: str  # "insignificant" or "collinear_loser"
    paired_with: str | None = None


@dataclass(frozen=True)
class SelectionResult:
    included: tuple
    excluded: dict
    ranking: tuple
    pairs: tuple = ()  # over-threshold pairs as (a, b, r)


def _canon(codes):
    return sorted(codes, key=lambda c: CODE_INDEX.get(c, len(CODE_INDEX)))


def _beats(a, b, report):
    """True when ``a`` is kept over ``b``: higher |r| with grade, then earlier code."""
    ra, rb = abs(report.r[a]), abs(report.r[b])
    if ra != rb:
        return ra > rb
    return CODE_INDEX.get(a, len(CODE_INDEX)) < CODE_INDEX.get(b, len(CODE_INDEX))


def prune_collinear(pairs, report, candidates, pair_threshold=PAIR_THRESHOLD):
    """Drop the weaker member of every pair with |r_pair| > ``pair_threshold``.

    ``pairs`` maps ``(a, b)`` to the pair correlation. Pairs are visited in
    descending |r_pair| (canonical order on ties); a pair is skipped once
    either member is gone. Returns ``(kept, dropped, over)`` where
    ``dropped`` maps loser -> winner and ``over`` lists the over-threshold
    pairs among the candidates.
    """
    alive = set(candidates)
    over = []
    for (a, b), r in pairs.items():
        if a in alive and b in alive and abs(r) > pair_threshold:
            a, b = _canon([a, b])
            over.append((a, b, r))
    over.sort(key=lambda p: (-abs(p[2]), CODE_INDEX.get(p[0], 99), CODE_INDEX.get(p[1], 99)))
    dropped = {}
    for a, b, _ in over:
        if a not in alive or b not in alive:
            continue
        winner, loser = (a, b) if _beats(a, b, report) else (b, a)
        alive.discard(loser)
        dropped[loser] = winner
    return _canon(alive), dropped, tuple(over)


def rank_features(included, report):
    """Included codes by descending |r| with grade; canonical order breaks ties."""
    return sorted(included, key=lambda c: (-abs(report.r[c]), CODE_INDEX.get(c, len(CODE_INDEX))))


def select_from_report(report, pairs, sig=SIG_THRESHOLD, pair=PAIR_THRESHOLD):
    """Selection from precomputed grade and pair correlations."""
    passed = set(significance_filter(report, sig))
    excluded = {c: Exclusion("insignificant") for c in report.r if c not in passed}
    kept, dropped, over = prune_collinear(pairs, report, passed, pair)
    for loser, winner in dropped.items():
        excluded[loser] = Exclusion("collinear_loser", winner)
    return SelectionResult(
        included=tuple(kept),
        excluded=dict(sorted(excluded.items(), key=lambda kv: CODE_INDEX.get(kv[0], 99))),
        ranking=tuple(rank_features(kept, report)),
        pairs=over,
    )


def select_features(matrix, grades, sig=SIG_THRESHOLD, pair=PAIR_THRESHOLD, codes=FEATURE_CODES):
    report = correlate_features(matrix, grades, codes)
    passed = significance_filter(report, sig)
    pairs = pair_correlations(matrix, _canon(passed))
    return report, select_from_report(report, pairs, sig, pair)


# --- tabular report, mirrors the code/cor/sig/pair/include layout ---

REPORT_HEADER = ("code", "cor", "sig", "pair", "include")


def format_selection_report(report, result):
    partners = {}
    for a, b, _ in result.pairs:
        partners.setdefault(a, []).append(b)
        partners.setdefault(b, []).append(a)
    lines = ["\t".join(REPORT_HEADER)]
    for c in report.r:
        sig = "No" if result.excluded.get(c, Exclusion("")).reason == "insignificant" else "Yes"
        inc = "Yes" if c in result.included else "No"
        lines.append("\t".join([c, repr(report.r[c]), sig, ",".join(_canon(partners.get(c, []))), inc]))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SelectionTable:
    rows: tuple  # (code, cor, sig, pairs, include)

    @property
    def included(self):
        return tuple(code for code, _, _, _, inc in self.rows if inc)

    @property
    def correlations(self):
        return {code: cor for code, cor, _, _, _ in self.rows}


def _yes_no(value, lineno):
    if value not in ("Yes", "No"):
        raise ValueError(f"line {lineno}: expected Yes/No, got {value!r}")
    return value == "Yes"


def parse_selection_report(text):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or tuple(lines[0].split("\t")) != REPORT_HEADER:
        raise ValueError("selection report must start with the code/cor/sig/pair/include header")
    rows = []
    for lineno, line in enumerate(lines[1:], 2):
        parts = line.split("\t")
        if len(parts) != 5:
            raise ValueError(f"line {lineno}: expected 5 tab-separated columns")
        code, cor, sig, pair, inc = parts
        pairs = tuple(p for p in pair.split(",") if p)
        rows.append((code, float(cor), _yes_no(sig, lineno), pairs, _yes_no(inc, lineno)))
    return SelectionTable(tuple(rows))


def load_correlation_table(path):
    """Precomputed correlations: ``code<TAB>cor<TAB>pairs`` lines.

    ``pairs`` is a comma-separated list of ``code`` or ``code=r`` entries
    naming collinear partners; a bare code means the pair correlation is
    unknown but above any threshold (stored as 1.0). Returns the report and
    the pair map expected by :func:`select_from_report`.
    """
    r, pairs = {}, {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#") or line.startswith("code\t"):
                continue
            parts = line.split("\t")
            if len(parts) not in (2, 3):
                raise ValueError(f"line {lineno}: expected code<TAB>cor[<TAB>pairs]")
            code = parts[0].strip()
            try:
                r[code] = float(parts[1])
            except ValueError:
                raise ValueError(f"line {lineno}: bad correlation {parts[1]!r}") from None
            partners = parts[2].split(",") if len(parts) == 3 else []
            for p in partners:
                p = p.strip()
                if not p:
                    continue
                other, _, val = p.partition("=")
                key = tuple(_canon([code, other.strip()]))
                pairs[key] = float(val) if val else 1.0
    unknown = {c for pair in pairs for c in pair} - r.keys()
    if unknown:
        raise ValueError(f"pairs reference codes with no correlation: {sorted(unknown)}")
    ordered = dict(sorted(r.items(), key=lambda kv: CODE_INDEX.get(kv[0], 99)))
    return CorrelationReport(ordered, None), pairs
