"""The 29 readability features: simple, cognitively motivated, word difficulty."""
from collections.abc import Mapping
from dataclasses import dataclass, field
from importlib import resources
import math

from .textproc.annotate import noun_lemma
from .textproc.tagger import ADJ_TAGS, NOUN_TAGS
from .textproc.trees import base_label

SIMPLE_CODES = (
    "aWPS", "aSPW", "aNP", "aNN", "aVP", "aAdj", "aSBr", "aPP", "M3S",
    "nNP", "nNN", "nVP", "nAdj", "nSBr", "nPP",
)
COGNITIVE_CODES = ("nUE", "aEM", "aUE", "nLC", "aLCw", "aLCn")
DIFFICULTY_CODES = ("aCw", "nCw", "aDw", "nDw", "aEw", "nEw", "aFw", "nFw")
FEATURE_CODES = SIMPLE_CODES + COGNITIVE_CODES + DIFFICULTY_CODES
CODE_INDEX = {c: i for i, c in enumerate(FEATURE_CODES)}

FAMILY_OF = {
    **{c: "S" for c in SIMPLE_CODES},
    **{c: "CM" for c in COGNITIVE_CODES},
    **{c: "WD" for c in DIFFICULTY_CODES},
}

# feature base -> constituent label
_PHRASES = {"NP": "NP", "VP": "VP", "PP": "PP", "SBr": "SBAR"}
PROPER_NOUN_TAGS = frozenset(["NNP", "NNPS"])
DIFFICULTY_LEVELS = ("C", "D", "E", "F")


class FeatureVector(Mapping):
    """Immutable mapping of the 29 feature codes, iterated in canonical order."""

    def __init__(self, values, flags=()):
        missing = [c for c in FEATURE_CODES if c not in values]
        if missing:
            raise ValueError(f"missing feature(s): {', '.join(missing)}")
        extra = set(values) - set(FEATURE_CODES)
        if extra:
            raise ValueError(f"unknown feature(s): {', '.join(sorted(extra))}")
        self._values = tuple(values[c] for c in FEATURE_CODES)
        for c, v in zip(FEATURE_CODES, self._values):
            if not math.isfinite(v):
                raise ValueError(f"feature {c} is not finite: {v}")
        self.flags = tuple(flags)

    def __getitem__(self, code):
        return self._values[CODE_INDEX[code]]

    def __iter__(self):
        return iter(FEATURE_CODES)

    def __len__(self):
        return len(FEATURE_CODES)

    def __eq__(self, other):
        if isinstance(other, FeatureVector):
            return self._values == other._values and self.flags == other.flags
        return Mapping.__eq__(self, other)

    __hash__ = None

    def __repr__(self):
        body = ", ".join(f"{c}={v!r}" for c, v in self.items())
        return f"FeatureVector({body})"

    def as_list(self):
        return list(self._values)


def _tree_counts(sentences):
    counts = {k: 0 for k in ("NP", "VP", "PP", "SBr", "NN", "Adj")}
    for s in sentences:
        for node in s.tree.nodes():
            if node.is_leaf:
                if node.label in PROPER_NOUN_TAGS:
                    counts["NN"] += 1
                elif node.label in ADJ_TAGS:
                    counts["Adj"] += 1
                continue
            label = base_label(node.label)
            for base, phrase in _PHRASES.items():
                if label == phrase:
                    counts[base] += 1
    return counts


def simple_features(text):
    n_sent = text.sentence_count
    n_words = text.word_count
    if not n_sent or not n_words:
        raise ValueError("text has no sentences or no words")
    if any(s.tree is None for s in text.sentences):
        raise ValueError("simple features need a parse tree for every sentence")
    syl = text.syllable_counts
    out = {
        "aWPS": n_words / n_sent,
        "aSPW": sum(syl) / n_words,
        "M3S": sum(1 for c in syl if c >= 3) / n_words,
    }
    counts = _tree_counts(text.sentences)
    for base in ("NP", "NN", "VP", "Adj", "SBr", "PP"):
        out["n" + base] = counts[base]
        out["a" + base] = counts[base] / n_sent
    return out


@dataclass(frozen=True)
class EntityIndex:
    entities: frozenset
    mentions: int
    per_sentence_unique: tuple


def _maximal_nps(tree):
    stack = [tree]
    while stack:
        node = stack.pop()
        if not node.is_leaf and base_label(node.label) == "NP":
            yield node
            continue
        stack.extend(reversed(node.children))


def build_entity_index(text):
    """Entity mentions are maximal NPs containing a noun leaf.

    The entity key of a mention is its rightmost noun-tagged leaf, lowercased
    with a plural ``-s`` removed.
    """
    entities = set()
    mentions = 0
    per_sentence = []
    for s in text.sentences:
        keys = set()
        for np in _maximal_nps(s.tree):
            nouns = [leaf for leaf in np.leaves() if leaf.label in NOUN_TAGS]
            if not nouns:
                continue
            head = nouns[-1]
            keys.add(noun_lemma(head.leaf_text, head.label))
            mentions += 1
        entities |= keys
        per_sentence.append(len(keys))
    return EntityIndex(frozenset(entities), mentions, tuple(per_sentence))


def entity_features(index, sentence_count):
    if sentence_count < 1:
        raise ValueError("sentence_count must be >= 1")
    n_ue = len(index.entities)
    return {"nUE": n_ue, "aEM": index.mentions / sentence_count, "aUE": n_ue / sentence_count}


@dataclass(frozen=True)
class RelationResource:
    synonym_groups: tuple = ()
    hypernyms: frozenset = frozenset()
    resource_id: str = "empty"
    _groups_of: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        groups_of = {}
        for i, group in enumerate(self.synonym_groups):
            for lemma in group:
                if lemma != lemma.lower():
                    raise ValueError(f"relation lemma {lemma!r} is not lowercase")
                groups_of.setdefault(lemma, set()).add(i)
        object.__setattr__(self, "_groups_of", groups_of)
        self._check_acyclic()

    def _check_acyclic(self):
        parents = {}
        for child, parent in self.hypernyms:
            if child != child.lower() or parent != parent.lower():
                raise ValueError(f"hypernym edge {child}->{parent} is not lowercase")
            parents.setdefault(child, set()).add(parent)
        state = {}

        def visit(node):
            if state.get(node) == 1:
                raise ValueError(f"hypernym cycle through {node!r}")
            if state.get(node) == 2:
                return
            state[node] = 1
            for p in sorted(parents.get(node, ())):
                visit(p)
            state[node] = 2

        for node in sorted(parents):
            visit(node)

    def related(self, a, b):
        if a == b:
            return True
        if self._groups_of.get(a, set()) & self._groups_of.get(b, set()):
            return True
        return (a, b) in self.hypernyms or (b, a) in self.hypernyms


def load_relations(path=None):
    """Read ``syn:a,b,c`` and ``hyp:child<TAB>parent`` lines.

    ``None`` loads the small bundled resource.
    """
    if path is None:
        text = resources.files("lxper.data").joinpath("relations.txt").read_text("utf-8")
        rid = "bundled"
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
        rid = str(path)
    groups, edges = [], set()
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("syn:"):
            lemmas = tuple(w.strip().lower() for w in line[4:].split(",") if w.strip())
            if len(lemmas) < 2:
                raise ValueError(f"relations line {lineno}: a synonym group needs two lemmas")
            groups.append(frozenset(lemmas))
        elif line.startswith("hyp:"):
            parts = line[4:].split("\t")
            if len(parts) != 2 or not all(p.strip() for p in parts):
                raise ValueError(f"relations line {lineno}: expected hyp:child<TAB>parent")
            edges.add((parts[0].strip().lower(), parts[1].strip().lower()))
        else:
            raise ValueError(f"relations line {lineno}: unknown record type")
    return RelationResource(tuple(groups), frozenset(edges), rid)


@dataclass(frozen=True)
class LexicalChainSet:
    chains: tuple
    resource_id: str


def build_lexical_chains(text, resource):
    """Greedy single-pass chainer over noun occurrences in document order.

    Each occurrence joins the chain whose last member is most recent and
    related to it (same lemma, shared synonym group, or a direct hypernym
    edge); otherwise it starts a new candidate. Singletons are dropped.
    """
    chains = []  # ordered by position of last member, most recent last
    for sent_idx, nouns in enumerate(text.noun_lemmas):
        for lemma in nouns:
            for k in range(len(chains) - 1, -1, -1):
                if resource.related(chains[k][-1][1], lemma):
                    chain = chains.pop(k)
                    chain.append((sent_idx, lemma))
                    chains.append(chain)
                    break
            else:
                chains.append([(sent_idx, lemma)])
    kept = sorted((c for c in chains if len(c) >= 2), key=lambda c: c[0])
    return LexicalChainSet(tuple(tuple(c) for c in kept), resource.resource_id)


def lexical_chain_features(chains, word_count, np_count):
    """Returns ``(features, flags)``; flags note the zero-NP convention."""
    if word_count < 1:
        raise ValueError("word_count must be >= 1")
    n_lc = len(chains.chains)
    flags = []
    if np_count == 0:
        a_lcn = 0.0
        if n_lc:
            flags.append("aLCn:no_noun_phrases")
    else:
        a_lcn = n_lc / np_count
    return {"nLC": n_lc, "aLCw": n_lc / word_count, "aLCn": a_lcn}, flags


def word_difficulty_features(text, wordlist):
    """Token-level counts and proportions of level C-F words."""
    if not len(wordlist):
        raise ValueError("word list is empty")
    n_words = text.word_count
    if n_words < 1:
        raise ValueError("text has no words")
    counts = dict.fromkeys(DIFFICULTY_LEVELS, 0)
    for w in text.words:
        level = wordlist.level(w.lower)
        if level in counts:
            counts[level] += 1
    out = {}
    for level in DIFFICULTY_LEVELS:
        out[f"a{level}w"] = counts[level] / n_words
        out[f"n{level}w"] = counts[level]
    return out


def extract_all(text, wordlist, resource, entity_strategy=build_entity_index):
    """Full feature vector; ``entity_strategy`` maps a text to an :class:`EntityIndex`."""
    values = simple_features(text)
    values.update(entity_features(entity_strategy(text), text.sentence_count))
    chain_values, flags = lexical_chain_features(
        build_lexical_chains(text, resource), text.word_count, values["nNP"]
    )
    values.update(chain_values)
    values.update(word_difficulty_features(text, wordlist))
    return FeatureVector(values, flags)
