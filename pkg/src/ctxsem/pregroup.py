"""Pregroup types, reductions, and the typed-tensor composition product.

Grammatical types are sequences of basic types with integer adjoint
degree (negative = left adjoints, positive = right adjoints).  Meanings
are weighted sums of tensors whose factors pair a semantic vector with a
basic type; composing two tensors contracts matching boundary types into
inner products of their semantic parts and concatenates the rest.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from .errors import MalformedInput, UnknownWord
from .sparse import ZERO_TOL, SparseVec, inner


@dataclass(frozen=True)
class AdjointType:
    base: str
    z: int = 0

    def left_adjoint(self):
        return AdjointType(self.base, self.z - 1)

    def right_adjoint(self):
        return AdjointType(self.base, self.z + 1)

    def __str__(self):
        if self.z < 0:
            return f"{self.base}^{'l' * -self.z}"
        if self.z > 0:
            return f"{self.base}^{'r' * self.z}"
        return self.base


def contracts(t1, t2):
    """True iff the adjacent pair t1 t2 cancels (x^l x or x x^r, iterated)."""
    return t1.base == t2.base and t2.z == t1.z + 1


def parse_type(text):
    """Parse a complex type like ``pi^r s o^l`` into a tuple of AdjointType."""
    out = []
    for token in text.split():
        base, _, adj = token.partition("^")
        if not base:
            raise MalformedInput(f"bad type token: {token!r}")
        if adj and set(adj) not in ({"l"}, {"r"}):
            raise MalformedInput(f"bad adjoint marker in {token!r}")
        z = -len(adj) if adj.startswith("l") else len(adj)
        out.append(AdjointType(base, z))
    return tuple(out)


def format_type(ct):
    return " ".join(str(t) for t in ct) if ct else "1"


def is_irreducible(ct):
    return not any(contracts(a, b) for a, b in zip(ct, ct[1:]))


def reduces_to(ct, target):
    """Reachability of target from ct by deleting adjacent contractible pairs.

    Returns (ok, witness); the witness lists intermediate types after each
    contraction, starting from ct.
    """
    target = tuple(target)

    @lru_cache(maxsize=None)
    def search(t):
        if t == target:
            return ()
        if len(t) < len(target) + 2:
            return None
        for i in range(len(t) - 1):
            if contracts(t[i], t[i + 1]):
                rest = search(t[:i] + t[i + 2:])
                if rest is not None:
                    return (t[:i] + t[i + 2:],) + rest
        return None

    steps = search(tuple(ct))
    if steps is None:
        return False, []
    return True, [tuple(ct)] + list(steps)


@dataclass(frozen=True)
class TypedFactor:
    sem: SparseVec
    typ: AdjointType


@dataclass(frozen=True)
class TypedTensor:
    coeff: float
    factors: Tuple[TypedFactor, ...] = ()

    def type(self):
        return tuple(f.typ for f in self.factors)


def type_of(term):
    return term.type()


class GammaVec:
    """Finite weighted sum of typed tensors; like-factored terms are merged."""

    def __init__(self, terms=()):
        merged = []
        for t in terms:
            for i, m in enumerate(merged):
                if m.factors == t.factors:
                    merged[i] = TypedTensor(m.coeff + t.coeff, m.factors)
                    break
            else:
                merged.append(t)
        self.terms = tuple(t for t in merged if abs(t.coeff) > ZERO_TOL)

    @classmethod
    def scalar(cls, c):
        return cls([TypedTensor(float(c))])

    @classmethod
    def word(cls, sems, typ):
        factors = tuple(TypedFactor(s, t) for s, t in zip(sems, typ))
        return cls([TypedTensor(1.0, factors)])

    def scale(self, c):
        return GammaVec([TypedTensor(c * t.coeff, t.factors) for t in self.terms])

    def __add__(self, other):
        return GammaVec(self.terms + other.terms)

    def __eq__(self, other):
        if not isinstance(other, GammaVec):
            return NotImplemented
        return _gamma_close(self, other)

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return "GammaVec(0)"
        parts = []
        for t in self.terms:
            factors = " (x) ".join(
                f"({f.sem!r} : {f.typ})" for f in t.factors
            ) or "1"
            parts.append(f"{t.coeff:g} * {factors}")
        return "GammaVec(" + " + ".join(parts) + ")"


def _gamma_close(u, v, tol=1e-9):
    remaining = list(v.terms)
    if len(u.terms) != len(remaining):
        return False
    for a in u.terms:
        for i, b in enumerate(remaining):
            if a.factors == b.factors and abs(a.coeff - b.coeff) <= tol * max(
                1.0, abs(a.coeff), abs(b.coeff)
            ):
                remaining.pop(i)
                break
        else:
            return False
    return True


def _term_product(a, b):
    coeff = a.coeff * b.coeff
    fa, fb = list(a.factors), list(b.factors)
    while fa and fb and contracts(fa[-1].typ, fb[0].typ):
        coeff *= inner(fa[-1].sem, fb[0].sem)
        fa.pop()
        fb.pop(0)
    return TypedTensor(coeff, tuple(fa + fb))


def gamma_product(u, v):
    """Bilinear extension of the boundary-contraction product."""
    return GammaVec(
        _term_product(a, b) for a in u.terms for b in v.terms
    )


@dataclass(frozen=True)
class Lexicon:
    entries: dict  # word -> (ComplexType, tuple of SparseVec)

    def gamma(self, word):
        try:
            typ, sems = self.entries[word]
        except KeyError:
            raise UnknownWord(word) from None
        return GammaVec.word(sems, typ)

    def type(self, word):
        try:
            return self.entries[word][0]
        except KeyError:
            raise UnknownWord(word) from None


def _parse_inline_vector(text):
    from .keys import parse_key

    entries = [e.strip() for e in text.split(",") if e.strip()]
    if entries and "=" not in entries[0]:
        # dense shorthand: comma-separated axis coordinates
        return SparseVec({("axis", i): float(e) for i, e in enumerate(entries)})
    pairs = []
    for e in entries:
        key_text, _, value = e.partition("=")
        pairs.append((parse_key(key_text), float(value)))
    return SparseVec(pairs)


def parse_lexicon(text):
    """Lexicon file: lines ``word<TAB>type<TAB>vectors`` with one inline
    vector per type factor, separated by semicolons."""
    entries = {}
    for n, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise MalformedInput(f"lexicon line {n}: expected 3 tab-separated fields")
        word, type_text, vec_text = parts
        typ = parse_type(type_text)
        if not is_irreducible(typ):
            raise MalformedInput(f"lexicon line {n}: type {type_text!r} is reducible")
        sems = tuple(_parse_inline_vector(v) for v in vec_text.split(";"))
        if len(sems) != len(typ):
            raise MalformedInput(
                f"lexicon line {n}: {len(sems)} vectors for {len(typ)} type factors"
            )
        if any(s.is_zero() for s in sems):
            raise MalformedInput(f"lexicon line {n}: zero semantic vector")
        entries[word] = (typ, sems)
    return Lexicon(entries)


def compose_sentence(lexicon, words):
    """Left-to-right gamma product of the words' typed tensors."""
    acc = GammaVec.scalar(1.0)
    for w in words:
        acc = gamma_product(acc, lexicon.gamma(w))
    return acc


def sentence_type(lexicon, words):
    out = ()
    for w in words:
        out = out + lexicon.type(w)
    return out
