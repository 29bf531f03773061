from dataclasses import dataclass
from enum import Enum
import re


class TokenKind(str, Enum):
    WORD = "word"
    NUMBER = "number"
    PUNCTUATION = "punctuation"


@dataclass(frozen=True)
class Token:
    surface: str
    kind: TokenKind

    @property
    def lower(self):
        return self.surface.lower()

    @property
    def letter_count(self):
        return sum(1 for c in self.surface if c.isalpha())

    @property
    def is_word(self):
        return self.kind is TokenKind.WORD


_NUMBER = re.compile(r"^\d+(?:[.,]\d+)*$")


def _classify(core):
    if any(c.isalpha() for c in core):
        return TokenKind.WORD
    if any(c.isdigit() for c in core):
        return TokenKind.NUMBER
    return TokenKind.PUNCTUATION


def tokenize(sentence):
    """Whitespace tokenizer that peels punctuation off both ends of each chunk.

    Inner hyphens and apostrophes stay inside the word ("well-known",
    "don't"). Every detached punctuation character becomes its own token.
    """
    if not sentence or not sentence.strip():
        raise ValueError("cannot tokenize empty sentence")
    tokens = []
    for chunk in sentence.split():
        i, j = 0, len(chunk)
        while i < j and not chunk[i].isalnum():
            i += 1
        while j > i and not chunk[j - 1].isalnum():
            j -= 1
        tokens.extend(Token(c, TokenKind.PUNCTUATION) for c in chunk[:i])
        core = chunk[i:j]
        if core:
            kind = TokenKind.NUMBER if _NUMBER.match(core) else _classify(core)
            tokens.append(Token(core, kind))
        tokens.extend(Token(c, TokenKind.PUNCTUATION) for c in chunk[j:])
    return tokens
