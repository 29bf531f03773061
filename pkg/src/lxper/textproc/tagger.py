"""Lexicon + suffix POS tagger and a fixed-rule chunker.

Used when no external constituency parses are supplied. Output is a shallow
tree: ``S`` over NP/VP/PP/SBAR chunks over preterminals. A PP holds its
preposition and the NP that follows it; an SBAR opened by a subordinator
runs to the next comma or the end of the sentence.
"""
from .tokens import TokenKind
from .trees import ParseTree

_CLOSED = {
    "DT": "a an the this that these those each every some any no another all both either neither",
    "PRP": "i you he she it we they me him her us them myself yourself himself herself itself ourselves themselves",
    "PRP$": "my your his its our their",
    "IN": "of in on at by for with from to into onto about over under between through during "
          "after before against among without within across behind beyond near toward towards "
          "upon around along like than",
    "CC": "and or but nor yet so",
    "MD": "can could will would shall should may might must",
    "RB": "not very too also just only never always often sometimes still already quite really "
          "even soon now then here there again almost",
    "EX": "",
    "CD": "one two three four five six seven eight nine ten eleven twelve twenty hundred thousand million",
    "WDT": "which whichever",
    "WP": "who whom whoever what whatever",
    "WRB": "where how why",
    "VBZ": "is has does",
    "VBP": "are have do am",
    "VBD": "was were had did said went came took made saw knew thought got gave found told "
           "became left felt brought began kept held wrote stood heard meant met ran sat "
           "spoke grew lost fell sent built understood drew broke spent rose drove bought "
           "wore chose ate taught caught fought sought slept won sang swam flew threw",
    "VB": "be go get make take see know come give find tell become think say",
    "VBN": "been gone done seen known taken given written spoken chosen eaten broken",
    "VBG": "being",
    "JJ": "good new old great big small long little high low young large important different "
          "early bad able same happy sad hard easy strong short clear free whole true real "
          "full special sure dark cold hot warm kind red blue green white black",
}
LEXICON = {w: tag for tag, words in _CLOSED.items() for w in words.split()}

# subordinators open an SBAR chunk
SUBORDINATORS = frozenset(
    "because although though while since unless if whether when whenever where wherever "
    "until once that which who whom whose".split()
)

_SUFFIXES = (
    ("ness", "NN"), ("ment", "NN"), ("tion", "NN"), ("sion", "NN"), ("ity", "NN"),
    ("ous", "JJ"), ("ful", "JJ"), ("ive", "JJ"), ("able", "JJ"), ("ible", "JJ"),
    ("less", "JJ"), ("ical", "JJ"), ("ic", "JJ"), ("est", "JJS"),
    ("ly", "RB"), ("ing", "VBG"), ("ed", "VBD"), ("ize", "VB"), ("ise", "VB"),
    ("s", "NNS"),
)

_PUNCT_TAGS = {".": ".", "!": ".", "?": ".", ",": ",", ";": ":", ":": ":", "-": ":",
               "(": "-LRB-", ")": "-RRB-", '"': "''", "'": "''"}

NOUN_TAGS = frozenset(["NN", "NNS", "NNP", "NNPS"])
VERB_TAGS = frozenset(["VB", "VBD", "VBG", "VBN", "VBP", "VBZ"])
ADJ_TAGS = frozenset(["JJ", "JJR", "JJS"])


def tag_token(token, sentence_initial):
    if token.kind is TokenKind.PUNCTUATION:
        return _PUNCT_TAGS.get(token.surface, "SYM")
    if token.kind is TokenKind.NUMBER:
        return "CD"
    low = token.lower
    if low in SUBORDINATORS and low not in LEXICON:
        return "IN"
    if low in LEXICON:
        return LEXICON[low]
    if token.surface[0].isupper() and not sentence_initial:
        return "NNP"
    if "-" in low:
        return "JJ"
    for suffix, tag in _SUFFIXES:
        if low.endswith(suffix) and len(low) > len(suffix) + 2:
            if tag == "NNS" and low.endswith(("ss", "us", "is")):
                continue
            return tag
    return "NN"


def tag_tokens(tokens):
    tags = []
    initial = True
    for tok in tokens:
        tags.append(tag_token(tok, initial))
        if tok.kind is not TokenKind.PUNCTUATION:
            initial = False
    return tags


_NP_LEAD = frozenset(["DT", "PRP$", "CD"])
_NP_MOD = ADJ_TAGS | {"CD"}
_VP_LEAD = frozenset(["MD", "RB"])


def _take_np(tags, i):
    """End index of an NP starting at ``i``, or ``i`` when none starts there."""
    n = len(tags)
    if i < n and tags[i] in ("PRP", "EX"):
        return i + 1
    j = i
    while j < n and tags[j] in _NP_LEAD:
        j += 1
    while j < n and tags[j] in _NP_MOD:
        j += 1
    k = j
    while k < n and tags[k] in NOUN_TAGS:
        k += 1
    if k > j:
        return k
    # determiner + adjectives with no noun ("the rich") still form an NP
    if j > i and any(t in ADJ_TAGS for t in tags[i:j]):
        return j
    return i


def _take_vp(tags, i):
    n = len(tags)
    j = i
    while j < n and tags[j] in _VP_LEAD:
        j += 1
    k = j
    while k < n and (tags[k] in VERB_TAGS or tags[k] in ("RB", "TO")):
        k += 1
    if k > j and any(t in VERB_TAGS for t in tags[j:k]):
        return k
    return i


def _leaf(tok, tag):
    return ParseTree(tag, leaf_text=tok.surface)


def _chunk(tokens, tags, i, stop):
    """Chunk ``tokens[i:stop]`` into a list of subtrees."""
    out = []
    while i < stop:
        low = tokens[i].lower
        if tags[i] in ("IN", "WDT", "WP", "WRB") and low in SUBORDINATORS:
            end = i + 1
            while end < stop and tokens[end].surface != ",":
                end += 1
            inner = [_leaf(tokens[i], tags[i])] + _chunk(tokens, tags, i + 1, end)
            out.append(ParseTree("SBAR", tuple(inner)))
            i = end
            continue
        if tags[i] in ("IN", "TO"):
            np_end = _take_np(tags[:stop], i + 1)
            if np_end > i + 1:
                np = ParseTree("NP", tuple(_leaf(t, g) for t, g in zip(tokens[i + 1:np_end], tags[i + 1:np_end])))
                out.append(ParseTree("PP", (_leaf(tokens[i], tags[i]), np)))
                i = np_end
                continue
        end = _take_np(tags[:stop], i)
        if end > i:
            out.append(ParseTree("NP", tuple(_leaf(t, g) for t, g in zip(tokens[i:end], tags[i:end]))))
            i = end
            continue
        end = _take_vp(tags[:stop], i)
        if end > i:
            out.append(ParseTree("VP", tuple(_leaf(t, g) for t, g in zip(tokens[i:end], tags[i:end]))))
            i = end
            continue
        out.append(_leaf(tokens[i], tags[i]))
        i += 1
    return out


def heuristic_parse(tokens):
    """Deterministic shallow parse of one tokenized sentence."""
    tokens = list(tokens)
    if not any(t.is_word for t in tokens):
        raise ValueError("sentence has no word tokens")
    tags = tag_tokens(tokens)
    return ParseTree("S", tuple(_chunk(tokens, tags, 0, len(tokens))))
