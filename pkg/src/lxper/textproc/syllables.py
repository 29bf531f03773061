"""Heuristic English syllable counter backed by an exceptions table."""
from functools import lru_cache
from importlib import resources

VOWELS = frozenset("aeiouy")


@lru_cache(maxsize=None)
def load_exceptions(path=None):
    """Read ``word<TAB>count`` lines; the bundled table when ``path`` is None."""
    if path is None:
        text = resources.files("lxper.data").joinpath("syllable_exceptions.tsv").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    table = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            word, count = line.split("\t")
            n = int(count)
        except ValueError:
            raise ValueError(f"syllable exceptions line {lineno}: expected word<TAB>count") from None
        if n < 1:
            raise ValueError(f"syllable exceptions line {lineno}: count must be >= 1")
        table[word.lower()] = n
    return table


def _vowel_groups(letters):
    groups = []
    prev_vowel = False
    for i, c in enumerate(letters):
        vowel = c in VOWELS and not (c == "y" and i == 0)
        if vowel and not prev_vowel:
            groups.append(i)
        prev_vowel = vowel
    return groups


def count_syllables(word, exceptions=None):
    letters = "".join(c for c in word.lower() if c.isalpha())
    if not letters:
        raise ValueError(f"no alphabetic characters in {word!r}")
    table = load_exceptions() if exceptions is None else exceptions
    if letters in table:
        return table[letters]
    groups = _vowel_groups(letters)
    n = len(groups)
    # silent final e: only when the e is its own vowel group
    if n > 1 and letters.endswith("e") and groups[-1] == len(letters) - 1:
        consonant_le = (
            letters.endswith("le")
            and len(letters) >= 3
            and letters[-3] not in VOWELS
            and letters[-3] != "l"
        )
        if not consonant_le:
            n -= 1
    return max(n, 1)
