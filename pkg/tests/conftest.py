from importlib import resources
from pathlib import Path
import re

import pytest

from lxper import load_relations, load_text_corpus, load_word_list

FIXTURES = Path(__file__).parent / "fixtures"
SYNTHETIC = Path(str(resources.files("lxper.data").joinpath("synthetic")))

# short texts exercised by the feature-arithmetic and oracle checks
FIXTURE_TEXTS = [
    "The cat sat on the mat.",
    "John met John. Mary left.",
    "Dr. Smith visited the old museum in Paris because his daughter liked paintings. "
    "They stayed there for three days.",
    "Although the river was cold, the children swam with their dog. "
    "The dog and the cat slept near the tree after lunch.",
    "Scientists found an extraordinary animal in 2019. Nobody understood it!",
    "Cats.",
]


@pytest.fixture(scope="session")
def synthetic_paths():
    return {
        "corpus": SYNTHETIC / "corpus.jsonl",
        "wordlist": SYNTHETIC / "wordlist.tsv",
        "relations": SYNTHETIC / "relations.txt",
    }


@pytest.fixture(scope="session")
def synthetic(synthetic_paths):
    return (
        load_text_corpus(synthetic_paths["corpus"]),
        load_word_list(synthetic_paths["wordlist"]),
        load_relations(synthetic_paths["relations"]),
    )


@pytest.fixture
def small_wordlist(tmp_path):
    p = tmp_path / "w.tsv"
    p.write_text("cat\tC\nmat\tD\nsat\tA\nriver\tE\nextraordinary\tF\nmuseum\tD\nparis\tU\n", encoding="utf-8")
    return load_word_list(p)


def count_labels_in_bracketed(bracketed, labels):
    """Oracle: count constituents by scanning the bracketed string itself."""
    return sum(len(re.findall(r"\(" + re.escape(lab) + r"[\s(]", bracketed)) for lab in labels)


def count_leaf_tags_in_bracketed(bracketed, tags):
    return sum(len(re.findall(r"\(" + re.escape(t) + r" [^()\s]+\)", bracketed)) for t in tags)


# easy-word list used with the formula oracle table
ORACLE_EASY = frozenset(
    "the cat sat on mat run fly high my mother made a cake for party old man went to he was sad "
    "found an animal in it".split()
)


def read_formula_oracle():
    rows = []
    for line in (FIXTURES / "formula_oracle.tsv").read_text(encoding="utf-8").splitlines():
        if not line or line.startswith("#"):
            continue
        text, *nums = line.split("\t")
        counts = tuple(int(v) for v in nums[:5])
        rows.append((text, counts, tuple(float(v) for v in nums[5:])))
    return rows


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
