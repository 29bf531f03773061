from .annotate import AnalyzedText, Sentence, annotate, noun_lemma
from .segment import ABBREVIATIONS, segment_sentences
from .syllables import count_syllables, load_exceptions
from .tagger import heuristic_parse, tag_tokens
from .tokens import Token, TokenKind, tokenize
from .trees import ParseTree, TreeSyntaxError, base_label, parse_ptb, read_parse_file, serialize

__all__ = [
    "ABBREVIATIONS", "AnalyzedText", "ParseTree", "Sentence", "Token", "TokenKind",
    "TreeSyntaxError", "annotate", "base_label", "count_syllables", "heuristic_parse",
    "load_exceptions", "noun_lemma", "parse_ptb", "read_parse_file", "segment_sentences",
    "serialize", "tag_tokens", "tokenize",
]
