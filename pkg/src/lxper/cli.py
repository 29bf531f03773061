"""Batch command line: train, score, evaluate, select, compare, summarize."""
import argparse
import hashlib
import logging
from pathlib import Path
import sys

from . import baselines, model as lxmodel, selection
from .corpus import (
    format_grade, load_easy_words, load_text_corpus, load_word_list, split_corpus, summarize_corpus,
)
from .features import extract_all, load_relations
from .report import score_document
from .textproc import annotate, read_parse_file

log = logging.getLogger("lxper")

DEFAULTS = {
    "sig": selection.SIG_THRESHOLD,
    "pair": selection.PAIR_THRESHOLD,
    "version": "S+CM+WD",
    "test_fraction": 0.2,
    "seed": 7,
    "digits": None,
}


class UsageError(Exception):
    pass


def _sha256(path):
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _read_config(path):
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ValueError(f"{path} line {lineno}: expected key=value")
            values[key.strip().replace("-", "_")] = value.strip()
    return values


_CASTS = {"sig": float, "pair": float, "test_fraction": float, "seed": int, "digits": int}


def _apply_config(args):
    config = _read_config(args.config) if args.config else {}
    for key, value in config.items():
        if not hasattr(args, key):
            raise ValueError(f"config key {key!r} is not an option of '{args.command}'")
        if getattr(args, key) is None:
            setattr(args, key, _CASTS.get(key, str)(value))
    for key, value in DEFAULTS.items():
        if hasattr(args, key) and getattr(args, key) is None:
            setattr(args, key, value)


def _require(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError(f"'{args.command}' needs {', '.join(missing)}")


class Resources:
    def __init__(self, wordlist, relations=None, easywords=None):
        self.wordlist_path = wordlist
        self.relations_path = relations
        self.wordlist = load_word_list(wordlist)
        self.relations = load_relations(relations)
        self.easy = load_easy_words(easywords)

    def meta(self):
        out = {"wordlist": str(self.wordlist_path), "wordlist_sha256": _sha256(self.wordlist_path)}
        if self.relations_path:
            out.update(relations=str(self.relations_path), relations_sha256=_sha256(self.relations_path))
        return out


def _resources(args, model=None):
    res_meta = (model.meta.get("resources") or {}) if model else {}
    wordlist = args.wordlist or res_meta.get("wordlist")
    relations = args.relations or res_meta.get("relations")
    if wordlist is None:
        raise UsageError(f"'{args.command}' needs --wordlist")
    if model is not None and not args.wordlist and res_meta.get("wordlist_sha256") not in (None, _sha256(wordlist)):
        log.warning("word list %s changed since the model was trained", wordlist)
    return Resources(wordlist, relations, getattr(args, "easywords", None))


def _analyze_corpus(corpus, parses_dir):
    analyzed = {}
    for t in corpus:
        trees = None
        if parses_dir:
            path = Path(parses_dir) / f"{t.id}.ptb"
            if not path.exists():
                raise ValueError(f"no parse file for text {t.id!r} in {parses_dir}")
            trees = read_parse_file(path)
        try:
            analyzed[t.id] = annotate(t.text, trees)
        except ValueError as e:
            raise ValueError(f"text {t.id!r}: {e}") from None
    return analyzed


def _featurize(corpus, analyzed, res):
    return {t.id: extract_all(analyzed[t.id], res.wordlist, res.relations) for t in corpus}


def _fmt(x, digits):
    return repr(x) if digits is None else f"{x:.{digits}f}"


def cmd_train(args, out):
    _require(args, "corpus", "wordlist", "out")
    res = _resources(args)
    corpus = load_text_corpus(args.corpus)
    train_c, test_c = split_corpus(corpus, args.test_fraction, args.seed)
    analyzed = _analyze_corpus(corpus, args.parses)
    feats = _featurize(corpus, analyzed, res)

    rows = [feats[t.id] for t in train_c]
    report, result = selection.select_features(rows, train_c.grades, args.sig, args.pair)
    meta = {
        "corpus_sha256": _sha256(args.corpus),
        "corpus_texts": len(corpus),
        "test_fraction": args.test_fraction,
        "seed": args.seed,
        "sig_threshold": args.sig,
        "pair_threshold": args.pair,
        "resources": res.meta(),
    }
    results = lxmodel.train_versions(
        rows, train_c.grades, [feats[t.id] for t in test_c], test_c.grades, result.included, meta
    )
    chosen = results[args.version]
    if chosen.model is None:
        raise ValueError(f"version {args.version} failed to train: {chosen.error}")

    out_path = Path(args.out)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    lxmodel.save_model(chosen.model, out_path)
    for version, vr in results.items():
        if vr.model is not None:
            lxmodel.save_model(vr.model, out_path.with_name(f"{out_path.stem}.{version}{out_path.suffix}"))
    sel_path = out_path.with_name(out_path.stem + ".selection.tsv")
    sel_path.write_text(selection.format_selection_report(report, result), encoding="utf-8")
    table = lxmodel.format_versions_table(results)
    out_path.with_name(out_path.stem + ".versions.tsv").write_text(table + "\n", encoding="utf-8")

    out.write(f"selected {len(result.included)} of {len(report.r)} features: {' '.join(result.ranking)}\n")
    out.write(table + "\n")
    out.write(f"model ({args.version}) written to {out_path}\n")
    return 0


def cmd_score(args, out):
    _require(args, "model", "infile")
    model = lxmodel.load_model(args.model)
    res = _resources(args, model)
    document = Path(args.infile).read_text(encoding="utf-8")
    trees = read_parse_file(args.parses) if args.parses else None
    report = score_document(model, document, res.wordlist, res.relations, trees)
    out.write(report.format(args.digits))
    if report.errors:
        log.warning("%d paragraph(s) could not be scored", len(report.errors))
    return 0


def cmd_evaluate(args, out):
    _require(args, "model", "corpus")
    model = lxmodel.load_model(args.model)
    res = _resources(args, model)
    corpus = load_text_corpus(args.corpus)
    feats = _featurize(corpus, _analyze_corpus(corpus, args.parses), res)
    ev = lxmodel.evaluate(model, [feats[t.id] for t in corpus], corpus.grades)
    out.write("grade\tcount\tmean_prediction\tavg_error\n")
    for g, (mean, err, n) in ev.by_grade.items():
        out.write(f"{format_grade(g)}\t{n}\t{_fmt(mean, args.digits)}\t{_fmt(err, args.digits)}\n")
    out.write(f"all\t{ev.count}\t-\t{_fmt(ev.avg_error, args.digits)}\n")
    return 0


def _is_jsonl(path):
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                return line.lstrip().startswith("{")
    return True


def cmd_select(args, out):
    _require(args, "corpus")
    if _is_jsonl(args.corpus):
        _require(args, "wordlist")
        res = _resources(args)
        corpus = load_text_corpus(args.corpus)
        feats = _featurize(corpus, _analyze_corpus(corpus, args.parses), res)
        report, result = selection.select_features([feats[t.id] for t in corpus], corpus.grades, args.sig, args.pair)
    else:
        report, pairs = selection.load_correlation_table(args.corpus)
        result = selection.select_from_report(report, pairs, args.sig, args.pair)
    text = selection.format_selection_report(report, result)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    out.write(text)
    out.write(f"include ({len(result.included)}): {' '.join(result.included)}\n")
    out.write(f"ranking: {' '.join(result.ranking)}\n")
    return 0


def cmd_compare(args, out):
    _require(args, "model", "corpus")
    model = lxmodel.load_model(args.model)
    res = _resources(args, model)
    corpus = load_text_corpus(args.corpus)
    analyzed = _analyze_corpus(corpus, args.parses)
    table = baselines.compare_models(
        [(t.grade, analyzed[t.id]) for t in corpus], model, res.easy, res.wordlist, res.relations
    )
    if args.out:
        Path(args.out).write_text(table.format_tsv(), encoding="utf-8")
    out.write(table.format_text(3 if args.digits is None else args.digits) + "\n")
    return 0


def cmd_summarize(args, out):
    _require(args, "corpus")
    corpus = load_text_corpus(args.corpus)
    analyzed = _analyze_corpus(corpus, args.parses)
    summary = summarize_corpus(corpus, lambda t: analyzed[t.id])
    out.write(summary.format_table(3 if args.digits is None else args.digits) + "\n")
    return 0


COMMANDS = {
    "train": cmd_train,
    "score": cmd_score,
    "evaluate": cmd_evaluate,
    "select": cmd_select,
    "compare": cmd_compare,
    "summarize": cmd_summarize,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--corpus", help="JSON-lines graded text corpus")
    common.add_argument("--wordlist", help="word<TAB>level graded word list")
    common.add_argument("--easywords", help="easy-word list for Dale-Chall (default: bundled)")
    common.add_argument("--relations", help="lexical relation resource (default: bundled)")
    common.add_argument("--parses", help="external parses: a directory of <id>.ptb files, or one file for 'score'")
    common.add_argument("--model", help="model file")
    common.add_argument("--out", help="output path")
    common.add_argument("--sig", type=float, help="significance threshold on |r| (default 0.05)")
    common.add_argument("--pair", type=float, help="collinearity threshold on |r| (default 0.85)")
    common.add_argument("--version", choices=lxmodel.VERSIONS, help="feature-family version (default S+CM+WD)")
    common.add_argument("--test-fraction", type=float, help="held-out share per grade (default 0.2)")
    common.add_argument("--seed", type=int, help="split seed (default 7)")
    common.add_argument("--digits", type=int, help="round printed scores (default: full precision)")
    common.add_argument("--config", help="key=value file; command-line flags take precedence")
    common.add_argument("--verbose", action="store_true", help="log progress with timestamps to stderr")

    parser = argparse.ArgumentParser(prog="lxper", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    helps = {
        "train": "select features, fit all seven versions, write model files",
        "score": "per-paragraph report for one document",
        "evaluate": "average error of a model on a graded corpus",
        "select": "correlation-based feature selection report",
        "compare": "model vs Flesch-Kincaid / Coleman-Liau / Dale-Chall",
        "summarize": "words/sentences per text and per grade",
    }
    for name, help_ in helps.items():
        p = sub.add_parser(name, parents=[common], help=help_)
        if name == "score":
            p.add_argument("--in", dest="infile", help="document to score")
    return parser


def run(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.INFO, format="%(asctime)s %(name)s %(levelname)s %(message)s")
    else:
        logging.basicConfig(level=logging.WARNING, format="%(name)s: %(levelname)s: %(message)s")
    try:
        _apply_config(args)
        return COMMANDS[args.command](args, out)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"lxper: error: {e}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError) as e:
        msg = " ".join(str(e).split())
        print(f"lxper: error: {msg}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
