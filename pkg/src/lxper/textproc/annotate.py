from dataclasses import dataclass

from .segment import segment_sentences
from .syllables import count_syllables
from .tagger import NOUN_TAGS, heuristic_parse
from .tokens import tokenize
from .trees import ParseTree, parse_ptb, read_parse_file


@dataclass(frozen=True)
class Sentence:
    text: str
    tokens: tuple
    tree: ParseTree

    @property
    def words(self):
        return [t for t in self.tokens if t.is_word]


@dataclass(frozen=True)
class AnalyzedText:
    sentences: tuple
    syllable_counts: tuple
    noun_lemmas: tuple

    @property
    def sentence_count(self):
        return len(self.sentences)

    @property
    def words(self):
        return [w for s in self.sentences for w in s.words]

    @property
    def word_count(self):
        return len(self.syllable_counts)

    @property
    def syllable_total(self):
        return sum(self.syllable_counts)

    @property
    def letter_total(self):
        return sum(w.letter_count for w in self.words)


def noun_lemma(surface, tag):
    """Lowercase a noun and strip a plural ``-s`` for NNS/NNPS tags."""
    low = surface.lower()
    if tag in ("NNS", "NNPS") and low.endswith("s") and not low.endswith("ss") and len(low) > 3:
        return low[:-1]
    return low


def _sentence_nouns(tree):
    return tuple(noun_lemma(leaf.leaf_text, leaf.label) for leaf in tree.leaves() if leaf.label in NOUN_TAGS)


def annotate(raw, trees=None):
    """Segment, tokenize, syllabify and parse ``raw``.

    ``trees`` selects the parse source: ``None`` runs the heuristic chunker;
    a path reads an external parse file; any other sequence is taken as one
    bracketed tree string (or :class:`ParseTree`) per segmented sentence.
    Sentences without word tokens (stray punctuation) are merged into the
    preceding sentence before parsing.
    """
    raw_sentences = segment_sentences(raw)
    tokenized = []
    pending_text, pending_toks = "", []
    for text in raw_sentences:
        toks = tokenize(text)
        if not any(t.is_word for t in toks):
            if tokenized:
                prev_text, prev_toks = tokenized[-1]
                tokenized[-1] = (f"{prev_text} {text}", prev_toks + toks)
            else:
                pending_text, pending_toks = f"{pending_text} {text}".strip(), pending_toks + toks
            continue
        if pending_toks:
            text, toks = f"{pending_text} {text}", pending_toks + toks
            pending_text, pending_toks = "", []
        tokenized.append((text, toks))
    if not tokenized:
        raise ValueError("text contains no words")

    if trees is None:
        parsed = [heuristic_parse(toks) for _, toks in tokenized]
    else:
        if isinstance(trees, (str, bytes)) or hasattr(trees, "__fspath__"):
            trees = read_parse_file(trees)
        trees = list(trees)
        if len(trees) < len(tokenized):
            raise ValueError(f"sentence {len(trees) + 1} has no tree")
        if len(trees) > len(tokenized):
            raise ValueError(f"{len(trees)} trees supplied for {len(tokenized)} sentences")
        parsed = []
        for idx, ((_, toks), tree) in enumerate(zip(tokenized, trees), 1):
            if not isinstance(tree, ParseTree):
                tree = parse_ptb(tree)
            n_leaves = len(tree.leaves())
            if n_leaves != len(toks):
                raise ValueError(f"sentence {idx}: tree has {n_leaves} leaves but {len(toks)} tokens")
            parsed.append(tree)

    sentences = tuple(Sentence(text, tuple(toks), tree) for (text, toks), tree in zip(tokenized, parsed))
    syllables = tuple(count_syllables(w.surface) for s in sentences for w in s.words)
    nouns = tuple(_sentence_nouns(s.tree) for s in sentences)
    return AnalyzedText(sentences, syllables, nouns)
