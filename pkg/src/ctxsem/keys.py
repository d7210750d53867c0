"""Basis keys for sparse vectors.

A key is a tagged tuple ``(tag, payload)``.  Tags:

    "axis"  -- integer index into a finite-dimensional space
    "tok"   -- a single word
    "seq"   -- a tuple of symbols (a free-monoid element; empty = identity)
    "bag"   -- a sorted tuple of words (a multiset / commuted string)
    "pair"  -- a pair of word tuples (left context, right context)
    "doc"   -- integer document id

Keys of different tags never compare equal; the total order is tag first,
then payload.  Payloads within one tag are homogeneous, so plain tuple
comparison gives a total order.
"""

from .errors import MalformedInput

AXIS = "axis"
TOK = "tok"
SEQ = "seq"
BAG = "bag"
PAIR = "pair"
DOC = "doc"


def axis(i):
    return (AXIS, int(i))


def tok(word):
    return (TOK, word)


def seq(words):
    return (SEQ, tuple(words))


def bag(words):
    return (BAG, tuple(sorted(words)))


def pair(left, right):
    return (PAIR, (tuple(left), tuple(right)))


def doc(i):
    return (DOC, int(i))


def tag_of(key):
    return key[0]


def parse_key(text):
    """Parse the textual key syntax, e.g. ``axis:3``, ``seq:a b``, ``pair:a|b c``."""
    if ":" not in text:
        raise MalformedInput(f"bad key (missing tag): {text!r}")
    tag, _, payload = text.partition(":")
    if tag == AXIS:
        try:
            return axis(int(payload))
        except ValueError:
            raise MalformedInput(f"bad axis index: {payload!r}") from None
    if tag == DOC:
        try:
            return doc(int(payload))
        except ValueError:
            raise MalformedInput(f"bad doc id: {payload!r}") from None
    if tag == TOK:
        return tok(payload)
    if tag == SEQ:
        return seq(payload.split())
    if tag == BAG:
        return bag(payload.split())
    if tag == PAIR:
        if "|" not in payload:
            raise MalformedInput(f"bad pair key (missing '|'): {text!r}")
        left, _, right = payload.partition("|")
        return pair(left.split(), right.split())
    raise MalformedInput(f"unknown key tag: {tag!r}")


def format_key(key):
    tag, payload = key
    if tag in (AXIS, DOC):
        return f"{tag}:{payload}"
    if tag == TOK:
        return f"{tag}:{payload}"
    if tag in (SEQ, BAG):
        return f"{tag}:{' '.join(payload)}"
    if tag == PAIR:
        left, right = payload
        return f"pair:{' '.join(left)}|{' '.join(right)}"
    raise MalformedInput(f"unknown key tag: {tag!r}")
