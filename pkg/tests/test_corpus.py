import json
import logging
from types import SimpleNamespace

import pytest
from hypothesis import given, settings, strategies as st

from lxper.corpus import (
    CorpusError, GradedText, GradedTextCorpus, dump_text_corpus, dump_word_list, format_grade,
    load_easy_words, load_text_corpus, load_word_list, split_corpus, summarize_corpus,
)


def _write_jsonl(path, records):
    path.write_text("".join(json.dumps(r) + "\n" for r in records), encoding="utf-8")
    return path


def _corpus(counts):
    texts = []
    for grade, n in counts.items():
        for i in range(n):
            texts.append(GradedText(f"g{grade}-{i}", grade, "textbook", f"Text {i} of grade {grade}."))
    return GradedTextCorpus(tuple(texts), "t")


def test_counts_by_grade():
    c = _corpus({10.0: 88, 11.0: 88, 12.0: 88})
    assert c.counts_by_grade == {10.0: 88, 11.0: 88, 12.0: 88}


def test_load_and_round_trip(tmp_path):
    recs = [
        {"id": "a", "grade": 9, "source": "textbook", "text": "One. Two."},
        {"id": "b", "grade": 12.5, "source": "exam", "text": "Ünïcode text."},
    ]
    c = load_text_corpus(_write_jsonl(tmp_path / "c.jsonl", recs))
    assert [t.grade for t in c] == [9.0, 12.5]
    dump_text_corpus(c, tmp_path / "d.jsonl")
    assert load_text_corpus(tmp_path / "d.jsonl").texts == c.texts


@pytest.mark.parametrize("rec,msg", [
    ({"id": "a", "grade": 13, "source": "exam", "text": "x"}, "outside"),
    ({"id": "a", "grade": 6.5, "source": "exam", "text": "x"}, "outside"),
    ({"id": "a", "grade": 9, "source": "blog", "text": "x"}, "source"),
    ({"id": "a", "grade": 9, "source": "exam", "text": "  "}, "empty"),
    ({"id": "a", "grade": "nine", "source": "exam", "text": "x"}, "number"),
    ({"id": "a", "source": "exam", "text": "x"}, "missing"),
])
def test_rejects_bad_records(tmp_path, rec, msg):
    with pytest.raises(CorpusError, match=msg):
        load_text_corpus(_write_jsonl(tmp_path / "c.jsonl", [rec]))


def test_duplicate_ids_report_lines(tmp_path):
    rec = {"id": "a", "grade": 9, "source": "exam", "text": "x"}
    with pytest.raises(CorpusError, match="line 2: duplicate id 'a'"):
        load_text_corpus(_write_jsonl(tmp_path / "c.jsonl", [rec, rec]))


def test_malformed_json_line(tmp_path):
    p = tmp_path / "c.jsonl"
    p.write_text('{"id": "a", "grade": 9, "source": "exam", "text": "x"}\n{"id": \n', encoding="utf-8")
    with pytest.raises(CorpusError, match="line 2"):
        load_text_corpus(p)


def test_format_grade():
    assert format_grade(12.0) == "12"
    assert format_grade(12.5) == "12.5"


# --- word lists ---

def test_word_list_levels(tmp_path):
    p = tmp_path / "w.tsv"
    p.write_text("# comment\nCat\tA\nriver\tc\nparis\tU\n", encoding="utf-8")
    wl = load_word_list(p)
    assert wl.level("cat") == "A"
    assert wl.level("CAT") == "A"
    assert wl.level("river") == "C"
    assert wl.level("paris") is None
    assert "paris" in wl.unclassified
    assert wl.level("zebra") is None


def test_word_list_duplicate_keeps_last(tmp_path, caplog):
    p = tmp_path / "w.tsv"
    p.write_text("cat\tA\ncat\tD\n", encoding="utf-8")
    with caplog.at_level(logging.WARNING, logger="lxper"):
        wl = load_word_list(p)
    assert wl.level("cat") == "D"
    assert any("cat" in r.getMessage() for r in caplog.records)


@pytest.mark.parametrize("line", ["cat\tG\n", "cat\n", "two words\tA\n"])
def test_word_list_rejects(tmp_path, line):
    p = tmp_path / "w.tsv"
    p.write_text(line, encoding="utf-8")
    with pytest.raises(CorpusError, match="line 1"):
        load_word_list(p)


@given(st.dictionaries(st.text(alphabet="abcdefgh", min_size=1, max_size=8),
                       st.sampled_from("ABCDEFU"), max_size=30))
@settings(max_examples=40)
def test_word_list_round_trip(tmp_path_factory, entries):
    d = tmp_path_factory.mktemp("wl")
    (d / "a.tsv").write_text("".join(f"{w}\t{lv}\n" for w, lv in entries.items()), encoding="utf-8")
    wl = load_word_list(d / "a.tsv")
    dump_word_list(wl, d / "b.tsv")
    again = load_word_list(d / "b.tsv")
    assert again == wl
    for w, lv in entries.items():
        assert again.level(w) == (None if lv == "U" else lv)


def test_bundled_easy_words():
    easy = load_easy_words()
    assert len(easy) > 500
    assert "the" in easy and "The" in easy


# --- summaries ---

def _fake_analyze(counts):
    return lambda t: SimpleNamespace(word_count=counts[t.id][0], sentence_count=counts[t.id][1])


def test_summary_example():
    c = _corpus({9.0: 2})
    s = summarize_corpus(c, _fake_analyze({"g9.0-0": (10, 2), "g9.0-1": (5, 1)}))
    g = s.by_grade[9.0]
    assert (g.aWPT, g.aSPT, g.aWPS) == (7.5, 1.5, 5.0)


def test_summary_pools_totals_not_ratios():
    c = _corpus({9.0: 1, 10.0: 1})
    s = summarize_corpus(c, _fake_analyze({"g9.0-0": (10, 2), "g10.0-0": (30, 2)}))
    assert s.by_grade[9.0].aWPS == 5.0
    assert s.overall.aWPS == 10.0  # 40 / 4, not mean(5, 15)
    assert [name for name, _ in s.columns()] == ["Gr 9", "Gr 10", "All"]
    assert s.format_table(2).splitlines()[3] == "aWPS\t5.00\t15.00\t10.00"


def test_summary_empty():
    with pytest.raises(CorpusError):
        summarize_corpus(GradedTextCorpus(()), _fake_analyze({}))


# --- split ---

def test_split_partition_and_determinism():
    c = _corpus({9.0: 10, 10.0: 7, 12.5: 3})
    train1, test1 = split_corpus(c, 0.2, seed=1)
    train2, test2 = split_corpus(c, 0.2, seed=1)
    assert train1.texts == train2.texts and test1.texts == test2.texts
    ids = [t.id for t in train1] + [t.id for t in test1]
    assert sorted(ids) == sorted(t.id for t in c)
    assert test1.counts_by_grade == {9.0: 2, 10.0: 1, 12.5: 1}


def test_split_seeds_differ():
    c = _corpus({9.0: 40})
    assert split_corpus(c, 0.25, 1)[1].texts != split_corpus(c, 0.25, 2)[1].texts


def test_split_single_text_grade():
    c = _corpus({9.0: 5, 10.0: 1})
    with pytest.raises(CorpusError, match="grade 10 has a single text"):
        split_corpus(c, 0.2, 0)


@pytest.mark.parametrize("f", [0.0, 1.0, -0.1, 1.5])
def test_split_fraction_range(f):
    with pytest.raises(CorpusError):
        split_corpus(_corpus({9.0: 4}), f, 0)


@given(st.dictionaries(st.sampled_from([7.0, 8.0, 9.0, 12.5]), st.integers(2, 15), min_size=1),
       st.floats(0.05, 0.95), st.integers(0, 10**6))
def test_split_properties(counts, fraction, seed):
    c = _corpus(counts)
    train, test = split_corpus(c, fraction, seed)
    assert not {t.id for t in train} & {t.id for t in test}
    assert len(train) + len(test) == len(c)
    for g, n in counts.items():
        k = test.counts_by_grade[g]
        assert 1 <= k <= n - 1
        assert k == min(max(round(n * fraction), 1), n - 1)
