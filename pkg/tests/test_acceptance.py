"""Acceptance gate: one test per primary criterion, each printing a PASS/FAIL line.

The lines are also collected and repeated in the pytest terminal summary.
"""
import io
import math
import random
import statistics
import time

import numpy as np

from conftest import (
    FIXTURES, FIXTURE_TEXTS, ORACLE_EASY, count_labels_in_bracketed, count_leaf_tags_in_bracketed,
    read_formula_oracle,
)
from oracles import pearson_definition
from lxper import baselines, model as lxmodel
from lxper.cli import run
from lxper.corpus import EasyWordList, GradedWordList, load_easy_words, split_corpus
from lxper.features import FEATURE_CODES, RelationResource, extract_all
from lxper.report import parse_report, score_document
from lxper.selection import load_correlation_table, pearson, rank_features, select_features, select_from_report
from lxper.textproc import annotate, serialize

RESULTS = []

PUBLISHED_INCLUDED = (
    "aWPS aSPW aNP aNN aVP aAdj aSBr aPP nNP nNN nVP nAdj nPP aEM aUE nLC aLCw aCw nCw nDw nEw nFw"
).split()
PUBLISHED_RANKING = (
    "nDw aWPS aNP nCw nPP aPP aSPW aNN nNN nAdj aAdj nEw nNP aVP aCw aSBr nVP nLC nFw aLCw aUE aEM"
).split()


def _check(name, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else "")
    RESULTS.append(line)
    print(line)
    assert ok, line


def test_selection_fixture():
    start = time.perf_counter()
    report, pairs = load_correlation_table(FIXTURES / "published_correlations.tsv")
    result = select_from_report(report, pairs, 0.05, 0.85)
    elapsed = time.perf_counter() - start
    ok = (
        sorted(result.included) == sorted(PUBLISHED_INCLUDED)
        and "nUE" in result.excluded and "M3S" in result.excluded
        and elapsed < 1.0
    )
    _check("selection fixture: 22 included, nUE and M3S excluded, < 1 s", ok,
           f"{len(result.included)} included in {elapsed * 1000:.1f} ms")


def test_ranking_fixture():
    report, pairs = load_correlation_table(FIXTURES / "published_correlations.tsv")
    ranking = rank_features(select_from_report(report, pairs).included, report)
    ok = ranking == PUBLISHED_RANKING and report.r["nDw"] == 0.503 and ranking[-1] == "aEM"
    _check("ranking fixture: nDw (0.503) first, aEM last, exact order", ok, f"{ranking[0]} .. {ranking[-1]}")


def test_formula_oracles():
    easy = EasyWordList(ORACLE_EASY)
    worst = 0.0
    for text, _, (fk, cl, dc) in read_formula_oracle():
        a = annotate(text)
        worst = max(worst, abs(baselines.flesch_kincaid(a) - fk), abs(baselines.coleman_liau(a) - cl),
                    abs(baselines.dale_chall(a, easy) - dc))
    _check("formula oracles: FK/CL/DC on 5 texts within 1e-6", worst <= 1e-6, f"max deviation {worst:.2e}")


def test_pearson_correctness():
    rng = random.Random(2020)
    worst = sym = aff = 0.0
    for _ in range(100):
        n = rng.randint(3, 50)
        x = [rng.gauss(0, 10) for _ in range(n)]
        y = [rng.gauss(0, 1) + rng.choice([-1, 0.2, 1]) * v for v in x]
        r = pearson(x, y)
        worst = max(worst, abs(r - pearson_definition(x, y)))
        sym = max(sym, abs(r - pearson(y, x)))
        a, b = rng.uniform(0.1, 50), rng.uniform(-50, 50)
        aff = max(aff, abs(r - pearson([a * v + b for v in x], [a * v - b for v in y])))
    ok = worst <= 1e-9 and sym <= 1e-9 and aff <= 1e-9
    _check("pearson: oracle, symmetry, affine invariance within 1e-9", ok,
           f"oracle {worst:.1e}, symmetry {sym:.1e}, affine {aff:.1e}")


def test_ols_correctness():
    rng = np.random.default_rng(7)
    coef_err = orth = 0.0
    for p in (1, 3, 8):
        X = rng.normal(size=(40, p)) * rng.uniform(0.5, 20, size=p)
        beta = rng.normal(size=p)
        m = lxmodel.train(X, X @ beta + 3.25)
        coef_err = max(coef_err, np.max(np.abs(np.array(m.weights) - beta)), abs(m.intercept - 3.25))
        y = X @ beta + rng.normal(size=40)
        m = lxmodel.train(X, y)
        resid = y - X @ np.array(m.weights) - m.intercept
        for col in (*X.T, np.ones(40)):
            orth = max(orth, abs(col @ resid) / (np.linalg.norm(col) * np.linalg.norm(resid)))
    try:
        lxmodel.train(np.ones((3, 5)), [1.0, 2.0, 3.0])
        rejected = False
    except ValueError:
        rejected = True
    ok = coef_err <= 1e-9 and orth <= 1e-6 and rejected
    _check("OLS: planted coefficients within 1e-9, residuals orthogonal, underdetermined rejected", ok,
           f"coef {coef_err:.1e}, orthogonality {orth:.1e}")


def test_feature_arithmetic():
    wl = GradedWordList({"cat": "C", "mat": "D", "river": "E", "extraordinary": "F", "museum": "D"})
    res = RelationResource((frozenset({"cat", "dog"}),))
    pairs_s = [("aNP", "nNP"), ("aNN", "nNN"), ("aVP", "nVP"), ("aAdj", "nAdj"), ("aSBr", "nSBr"), ("aPP", "nPP")]
    pairs_w = [("aCw", "nCw"), ("aDw", "nDw"), ("aEw", "nEw"), ("aFw", "nFw")]
    problems = []
    for text in FIXTURE_TEXTS:
        a = annotate(text)
        f = extract_all(a, wl, res)
        S, W = a.sentence_count, a.word_count
        for (avg, total), denom in [(p, S) for p in pairs_s] + [(p, W) for p in pairs_w] + [(("aUE", "nUE"), S)]:
            # IEEE: a is the correctly rounded n/denom, and a*denom recovers n to the last bit
            if f[avg] != f[total] / denom or not math.isclose(f[avg] * denom, f[total], rel_tol=2 ** -52):
                problems.append(f"{avg}x{denom}!={total}")
        bracketed = " ".join(serialize(s.tree) for s in a.sentences)
        oracle = {
            "nNP": count_labels_in_bracketed(bracketed, ["NP"]),
            "nVP": count_labels_in_bracketed(bracketed, ["VP"]),
            "nPP": count_labels_in_bracketed(bracketed, ["PP"]),
            "nSBr": count_labels_in_bracketed(bracketed, ["SBAR"]),
            "nNN": count_leaf_tags_in_bracketed(bracketed, ["NNP", "NNPS"]),
            "nAdj": count_leaf_tags_in_bracketed(bracketed, ["JJ", "JJR", "JJS"]),
        }
        problems += [f"{c} tree count" for c, v in oracle.items() if f[c] != v]
        double = extract_all(annotate(text + " " + text), wl, res)
        problems += [f"{c} not doubled" for c in FEATURE_CODES
                     if c.startswith("n") and c not in ("nUE", "nLC") and double[c] != 2 * f[c]]
    _check("feature arithmetic: a x denominator = n, tree-count oracle, self-concatenation doubling",
           not problems, f"{len(FIXTURE_TEXTS)} texts" + (f"; {problems[:3]}" if problems else ""))


def test_end_to_end_synthetic(synthetic):
    start = time.perf_counter()
    corpus, wordlist, resource = synthetic
    train_c, test_c = split_corpus(corpus, 0.2, 7)
    analyzed = {t.id: annotate(t.text) for t in corpus}
    feats = {t.id: extract_all(analyzed[t.id], wordlist, resource) for t in corpus}
    train_rows = [feats[t.id] for t in train_c]
    _, selection = select_features(train_rows, train_c.grades)
    results = lxmodel.train_versions(train_rows, train_c.grades, [feats[t.id] for t in test_c], test_c.grades,
                                     selection.included)
    full, cm = results["S+CM+WD"].report, results["CM"].report
    table = baselines.compare_models([(t.grade, analyzed[t.id]) for t in test_c], results["S+CM+WD"].model,
                                     load_easy_words(), wordlist, resource)
    elapsed = time.perf_counter() - start
    lx = [table.row("lxper").by_grade[g] for g in (9.0, 10.0, 11.0, 12.0)]
    increasing = all(a < b for a, b in zip(lx, lx[1:]))
    ok = full.avg_error <= cm.avg_error and increasing and elapsed < 30
    _check("synthetic end-to-end: S+CM+WD AvgEr <= CM, LXPER increasing 9->12, < 30 s", ok,
           f"AvgEr {full.avg_error:.3f} vs {cm.avg_error:.3f}; means {', '.join(f'{v:.2f}' for v in lx)}; "
           f"{elapsed:.1f} s")


def test_report_contract(synthetic):
    corpus, wordlist, resource = synthetic
    m = lxmodel.RegressionModel(("aWPS", "nDw", "aCw"), (0.2, 0.1, 4.0), 5.0)
    doc = "\n\n".join(t.text for t in list(corpus)[::14])
    text = score_document(m, doc, wordlist, resource).format()
    parsed, summary = parse_report(text)
    scores = [s for _, s in parsed.scores]
    avg_err = abs(summary["average"] - statistics.fmean(scores))
    sd_err = abs(summary["standard dev."] - statistics.pstdev(scores))
    single = score_document(m, list(corpus)[0].text, wordlist, resource)
    ok = avg_err <= 1e-9 and sd_err <= 1e-9 and single.standard_dev == 0
    _check("report contract: average/stdev recompute within 1e-9, single paragraph stdev 0", ok,
           f"{len(scores)} paragraphs")


def test_determinism(tmp_path, synthetic_paths, synthetic):
    doc = tmp_path / "doc.txt"
    doc.write_text("\n\n".join(t.text for t in list(synthetic[0])[::20]), encoding="utf-8")
    snapshots = []
    for _ in range(2):
        out = io.StringIO()
        assert run(["train", "--corpus", str(synthetic_paths["corpus"]), "--wordlist", str(synthetic_paths["wordlist"]),
                    "--relations", str(synthetic_paths["relations"]), "--out", str(tmp_path / "m" / "model.lx")], out) == 0
        score_out = io.StringIO()
        assert run(["score", "--model", str(tmp_path / "m" / "model.lx"), "--in", str(doc)], score_out) == 0
        files = {p.name: p.read_bytes() for p in sorted((tmp_path / "m").iterdir())}
        snapshots.append((out.getvalue(), score_out.getvalue(), files))
    ok = snapshots[0] == snapshots[1]
    _check("determinism: train and score outputs byte-identical across runs", ok,
           f"{len(snapshots[0][2])} files compared")
