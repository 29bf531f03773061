"""End-to-end run on the bundled synthetic corpus.

Prints the corpus summary, the feature selection, the seven-version table
and the comparison against the classic formulas, all on the held-out split.
"""
import argparse
from dataclasses import dataclass, fields
from importlib import resources
from pathlib import Path
import time

from lxper import baselines, model as lxmodel
from lxper.corpus import load_easy_words, load_text_corpus, load_word_list, split_corpus, summarize_corpus
from lxper.features import extract_all, load_relations
from lxper.selection import select_features
from lxper.textproc import annotate

SYNTHETIC = Path(str(resources.files("lxper.data").joinpath("synthetic")))


@dataclass
class ExperimentConfig:
    corpus: str = str(SYNTHETIC / "corpus.jsonl")
    wordlist: str = str(SYNTHETIC / "wordlist.tsv")
    relations: str = str(SYNTHETIC / "relations.txt")
    test_fraction: float = 0.2
    seed: int = 7
    sig: float = 0.05
    pair: float = 0.85


def main(cfg):
    t0 = time.perf_counter()
    corpus = load_text_corpus(cfg.corpus)
    wordlist = load_word_list(cfg.wordlist)
    resource = load_relations(cfg.relations)
    analyzed = {t.id: annotate(t.text) for t in corpus}
    feats = {t.id: extract_all(analyzed[t.id], wordlist, resource) for t in corpus}
    print(summarize_corpus(corpus, lambda t: analyzed[t.id]).format_table())

    train_c, test_c = split_corpus(corpus, cfg.test_fraction, cfg.seed)
    rows = [feats[t.id] for t in train_c]
    report, sel = select_features(rows, train_c.grades, cfg.sig, cfg.pair)
    print(f"\nselected {len(sel.included)} features, by |r|:")
    print("  " + "  ".join(f"{c} {report.r[c]:.3f}" for c in sel.ranking))

    results = lxmodel.train_versions(rows, train_c.grades, [feats[t.id] for t in test_c], test_c.grades, sel.included)
    print("\n" + lxmodel.format_versions_table(results))

    table = baselines.compare_models(
        [(t.grade, analyzed[t.id]) for t in test_c], results["S+CM+WD"].model, load_easy_words(), wordlist, resource
    )
    print("\n" + table.format_text())
    print(f"\n{len(corpus)} texts in {time.perf_counter() - t0:.2f} s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    for f in fields(ExperimentConfig):
        ap.add_argument("--" + f.name.replace("_", "-"), type=f.type if callable(f.type) else str, default=f.default)
    main(ExperimentConfig(**vars(ap.parse_args())))
