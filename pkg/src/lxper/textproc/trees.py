"""Penn Treebank style bracketed trees."""
from dataclasses import dataclass


class TreeSyntaxError(ValueError):
    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


@dataclass(frozen=True)
class ParseTree:
    """A constituent node. Preterminals carry ``leaf_text`` and no children."""

    label: str
    children: tuple = ()
    leaf_text: str | None = None

    def __post_init__(self):
        if (self.leaf_text is None) == (not self.children):
            raise ValueError(f"node {self.label!r} needs children xor leaf_text")

    @property
    def is_leaf(self):
        return self.leaf_text is not None

    def nodes(self):
        """Pre-order iterator over every node, including preterminals."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def leaves(self):
        return [n for n in self.nodes() if n.is_leaf]

    def __str__(self):
        return serialize(self)


def base_label(label):
    """Strip function tags and indices: ``NP-SBJ-1`` -> ``NP``.

    Labels that start with a dash (``-NONE-``, ``-LRB-``) are returned as is.
    """
    if label.startswith("-"):
        return label
    for sep in "-=":
        label = label.split(sep, 1)[0]
    return label


def serialize(tree):
    if tree.is_leaf:
        return f"({tree.label} {tree.leaf_text})"
    return f"({tree.label} {' '.join(serialize(c) for c in tree.children)})"


def _lex(s):
    i, n = 0, len(s)
    while i < n:
        c = s[i]
        if c.isspace():
            i += 1
        elif c in "()":
            yield c, i
            i += 1
        else:
            j = i
            while j < n and not s[j].isspace() and s[j] not in "()":
                j += 1
            yield s[i:j], i
            i = j


def parse_ptb(bracketed):
    """Parse one bracketed tree such as ``(S (NP (NN cat)))``.

    Raises :class:`TreeSyntaxError` carrying the character offset of the
    first problem (unbalanced brackets, empty labels, trailing input).
    """
    tokens = list(_lex(bracketed))
    end = len(bracketed)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, end)

    def node():
        nonlocal pos
        tok, off = peek()
        if tok != "(":
            raise TreeSyntaxError("expected '('", off)
        pos += 1
        label, loff = peek()
        if label is None:
            raise TreeSyntaxError("unexpected end of input", loff)
        if label in "()":
            raise TreeSyntaxError("empty label", loff)
        pos += 1
        tok, off = peek()
        if tok is None:
            raise TreeSyntaxError("unexpected end of input", off)
        if tok not in "()":
            pos += 1
            close, coff = peek()
            if close != ")":
                raise TreeSyntaxError("expected ')' after leaf", coff)
            pos += 1
            return ParseTree(label, leaf_text=tok)
        children = []
        while True:
            tok, off = peek()
            if tok is None:
                raise TreeSyntaxError("unexpected end of input", off)
            if tok == ")":
                pos += 1
                break
            if tok != "(":
                raise TreeSyntaxError("bare token among children", off)
            children.append(node())
        if not children:
            raise TreeSyntaxError(f"node {label!r} has no children", off)
        return ParseTree(label, tuple(children))

    tree = node()
    if pos != len(tokens):
        raise TreeSyntaxError("trailing input", tokens[pos][1])
    return tree


def read_parse_file(path):
    """One bracketed tree per non-blank line."""
    with open(path, encoding="utf-8") as fh:
        return [line.strip() for line in fh if line.strip()]
