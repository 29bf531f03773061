"""Least-squares grade regression, feature-family versions, evaluation, persistence."""
from collections.abc import Mapping
from dataclasses import dataclass, field
import json
import math

import numpy as np

from .corpus import format_grade
from .features import FAMILY_OF, FEATURE_CODES

FORMAT = "lxper-model"
FORMAT_VERSION = 1
RIDGE = 1e-8

VERSIONS = ("S", "CM", "WD", "S+CM", "CM+WD", "S+WD", "S+CM+WD")


def version_codes(version, included):
    """Included feature codes whose family belongs to ``version``."""
    if version not in VERSIONS:
        raise ValueError(f"unknown version {version!r}; expected one of {', '.join(VERSIONS)}")
    families = set(version.split("+"))
    included = set(included)
    return tuple(c for c in FEATURE_CODES if c in included and FAMILY_OF[c] in families)


@dataclass(frozen=True)
class RegressionModel:
    feature_codes: tuple
    weights: tuple
    intercept: float
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if len(self.weights) != len(self.feature_codes):
            raise ValueError("weights and feature codes differ in length")
        if not all(math.isfinite(w) for w in (*self.weights, self.intercept)):
            raise ValueError("model coefficients must be finite")


def _as_matrix(rows, codes):
    if codes is None or not (len(rows) and isinstance(rows[0], Mapping)):
        X = np.asarray(rows, dtype=float)
    else:
        X = np.array([[row[c] for c in codes] for row in rows], dtype=float)
    if X.ndim == 1:
        X = X[:, None]
    return X


def train(rows, targets, codes=None, meta=None):
    """Ordinary least squares with intercept.

    ``rows`` is a sequence of mappings read through ``codes``, or a plain
    2-D array whose columns ``codes`` merely names. Solved by QR on the design matrix;
    a rank-deficient design falls back to normal equations damped by
    ``RIDGE`` and the fallback is recorded in ``meta["ridge"]``.
    """
    y = np.asarray(targets, dtype=float)
    X = _as_matrix(rows, codes)
    n, p = X.shape
    if codes is None:
        codes = tuple(f"x{i}" for i in range(p))
    if len(y) != n:
        raise ValueError(f"{n} rows but {len(y)} targets")
    if n <= p:
        raise ValueError(f"underdetermined: {n} rows for {p} features")
    if not (np.isfinite(X).all() and np.isfinite(y).all()):
        raise ValueError("non-finite value in training data")

    A = np.hstack([X, np.ones((n, 1))])
    Q, R = np.linalg.qr(A)
    diag = np.abs(np.diag(R))
    tol = diag.max() * max(A.shape) * np.finfo(float).eps
    ridge = bool((diag <= tol).any())
    if ridge:
        G = A.T @ A + RIDGE * np.eye(p + 1)
        beta = np.linalg.solve(G, A.T @ y)
    else:
        beta = _back_substitute(R, Q.T @ y)

    info = dict(meta or {})
    info.update(
        text_count=n,
        ridge=RIDGE if ridge else None,
        feature_means=[float(m) for m in X.mean(axis=0)],
    )
    return RegressionModel(
        tuple(codes), tuple(float(b) for b in beta[:p]), float(beta[p]), info
    )


def _back_substitute(R, b):
    x = np.zeros(R.shape[1])
    for i in range(R.shape[1] - 1, -1, -1):
        x[i] = (b[i] - R[i, i + 1:] @ x[i + 1:]) / R[i, i]
    return x


def predict(model, vector):
    """Intercept plus weighted sum; unclamped."""
    total = model.intercept
    for code, w in zip(model.feature_codes, model.weights):
        try:
            value = vector[code]
        except KeyError:
            raise KeyError(f"feature vector lacks {code!r}") from None
        total += w * value
    return total


@dataclass(frozen=True)
class EvaluationReport:
    avg_error: float
    by_grade: dict  # grade -> (mean prediction, mean abs error, count)
    count: int

    def format_row(self, name, grades=None, digits=3):
        grades = sorted(self.by_grade) if grades is None else grades
        cells = [f"{self.by_grade[g][0]:.{digits}f}" if g in self.by_grade else "-" for g in grades]
        return [name, *cells, f"{self.avg_error:.{digits}f}"]


def evaluate_predictions(predictions, targets):
    """Mean absolute error overall and per grade, plus per-grade mean prediction."""
    if len(predictions) != len(targets):
        raise ValueError("predictions and targets differ in length")
    if not predictions:
        raise ValueError("cannot evaluate an empty test set")
    buckets = {}
    for p, t in zip(predictions, targets):
        buckets.setdefault(float(t), []).append(p)
    by_grade = {}
    for g in sorted(buckets):
        preds = buckets[g]
        by_grade[g] = (
            math.fsum(preds) / len(preds),
            math.fsum(abs(p - g) for p in preds) / len(preds),
            len(preds),
        )
    avg = math.fsum(abs(p - float(t)) for p, t in zip(predictions, targets)) / len(targets)
    return EvaluationReport(avg, by_grade, len(targets))


def evaluate(model, vectors, targets):
    return evaluate_predictions([predict(model, v) for v in vectors], targets)


@dataclass(frozen=True)
class VersionResult:
    model: RegressionModel | None
    report: EvaluationReport | None
    error: str | None = None


def train_versions(train_rows, train_targets, test_rows, test_targets, included, meta=None):
    """Fit and evaluate every feature-family version; failures are recorded per version."""
    out = {}
    for version in VERSIONS:
        try:
            codes = version_codes(version, included)
            if not codes:
                raise ValueError(f"version {version} has no selected features")
            vmeta = dict(meta or {}, version=version)
            model = train(train_rows, train_targets, codes, vmeta)
            out[version] = VersionResult(model, evaluate(model, test_rows, test_targets))
        except ValueError as e:
            out[version] = VersionResult(None, None, str(e))
    return out


def format_versions_table(results, digits=3):
    grades = sorted({g for r in results.values() if r.report for g in r.report.by_grade})
    lines = ["\t".join(["Version", *(f"Gr {format_grade(g)}" for g in grades), "AvgEr"])]
    for version, res in results.items():
        if res.report is None:
            lines.append(f"{version.replace('+', '&')}\terror: {res.error}")
        else:
            lines.append("\t".join(res.report.format_row(version.replace("+", "&"), grades, digits)))
    return "\n".join(lines)


def save_model(model, path):
    doc = {
        "format": FORMAT,
        "format_version": FORMAT_VERSION,
        "feature_codes": list(model.feature_codes),
        "weights": list(model.weights),
        "intercept": model.intercept,
        "meta": model.meta,
    }
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_model(path):
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as e:
            raise ValueError(f"{path}: truncated or malformed model file ({e.msg})") from None
    if not isinstance(doc, dict) or doc.get("format") != FORMAT:
        raise ValueError(f"{path}: not a model file")
    if doc.get("format_version") != FORMAT_VERSION:
        raise ValueError(f"{path}: unsupported format version {doc.get('format_version')!r}")
    try:
        return RegressionModel(
            tuple(doc["feature_codes"]),
            tuple(float(w) for w in doc["weights"]),
            float(doc["intercept"]),
            doc.get("meta", {}),
        )
    except KeyError as e:
        raise ValueError(f"{path}: missing field {e.args[0]!r}") from None
