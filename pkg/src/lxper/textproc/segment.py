"""Rule-based sentence segmentation."""
import re

ABBREVIATIONS = frozenset(
    ["mr.", "mrs.", "dr.", "prof.", "st.", "vs.", "etc.", "e.g.", "i.e.", "u.s."]
)

# terminator run, optional closing quotes/brackets, then whitespace
_BOUNDARY = re.compile(r"[.!?]+[\"'”’)\]]*(?=\s)")
_OPENERS = "\"'“‘(["


def _is_abbreviation(raw, end):
    start = end
    while start > 0 and not raw[start - 1].isspace():
        start -= 1
    word = raw[start:end].lower().lstrip(_OPENERS)
    return word in ABBREVIATIONS


def segment_sentences(raw):
    """Split ``raw`` into sentence strings.

    A boundary is a run of ``.``, ``!`` or ``?`` (plus any closing quotes)
    followed by whitespace and then an uppercase letter or an opening quote.
    Periods ending a word from :data:`ABBREVIATIONS` never split. Returned
    sentences are stripped; no non-whitespace character is dropped.
    """
    if not raw or not raw.strip():
        raise ValueError("cannot segment empty text")
    sentences = []
    start = 0
    for m in _BOUNDARY.finditer(raw):
        end = m.end()
        nxt = end
        while nxt < len(raw) and raw[nxt].isspace():
            nxt += 1
        if nxt >= len(raw):
            continue
        if not (raw[nxt].isupper() or raw[nxt] in _OPENERS):
            continue
        term = m.group(0).rstrip("\"'”’)]")
        if term == "." and _is_abbreviation(raw, m.start() + 1):
            continue
        chunk = raw[start:end].strip()
        if chunk:
            sentences.append(chunk)
        start = end
    tail = raw[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences
