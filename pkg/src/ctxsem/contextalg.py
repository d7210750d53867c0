"""Context algebras: real-valued languages and the generated-subspace product.

A language assigns weights to strings of a free monoid; the context
vector of a string x collects the weights of every way x occurs inside a
weighted string, keyed by the surrounding (left, right) pair.  Products
are defined on the span of context vectors by expanding both factors in
a basis of context vectors and mapping basis products to concatenation.
The result is basis-independent, but unlike the concrete products it can
take positive vectors to vectors with negative components.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Tuple

import numpy as np

from . import keys
from .algebras import ContextTheory
from .errors import (
    EmptyCorpus,
    MalformedInput,
    NotDistribution,
    NotInSpan,
    NotPositive,
    SpanNotReached,
)
from .sparse import SparseVec

RANK_TOL = 1e-9


@dataclass(frozen=True)
class Language:
    """Finitely supported real-valued function on word sequences."""

    support: Dict[Tuple[str, ...], float]
    alphabet: FrozenSet[str]

    def value(self, x):
        return self.support.get(tuple(x), 0.0)

    def strings(self):
        return self.support.keys()


def make_language(weights):
    support = {tuple(x): float(c) for x, c in weights.items() if c != 0.0}
    alphabet = frozenset(w for x in support for w in x)
    return Language(support=support, alphabet=alphabet)


def language_from_corpus(corpus):
    """Uniform distribution over a corpus; duplicate strings accumulate mass."""
    corpus = [tuple(d) for d in corpus]
    if not corpus:
        raise EmptyCorpus("cannot build a language from an empty corpus")
    mass = 1.0 / len(corpus)
    support = {}
    for d in corpus:
        support[d] = support.get(d, 0.0) + mass
    alphabet = frozenset(w for x in support for w in x)
    return Language(support=support, alphabet=alphabet)


def classify_language(lang):
    """Most specific class: distribution => fuzzy => positive => real."""
    values = list(lang.support.values())
    if any(v < 0 for v in values):
        return "real"
    if abs(sum(values) - 1.0) <= 1e-9:
        return "distribution"
    if all(v <= 1.0 for v in values):
        return "fuzzy"
    return "positive"


def context_vector(lang, x):
    """The context vector of x: value at (y, z) is the language weight of yxz."""
    x = tuple(x)
    n = len(x)
    out = {}
    for w, c in lang.support.items():
        for i in range(len(w) - n + 1):
            if w[i:i + n] == x:
                k = keys.pair(w[:i], w[i + n:])
                out[k] = out.get(k, 0.0) + c
    return SparseVec(out)


def average_length(lang):
    """Expected string length, sum of L(x) * |x|; requires a positive language."""
    if any(v < 0 for v in lang.support.values()):
        raise NotPositive("average length requires a positive language")
    return sum(c * len(x) for x, c in lang.support.items())


@dataclass(frozen=True)
class ContextBasis:
    """Strings whose context vectors span the generated subspace."""

    strings: Tuple[Tuple[str, ...], ...]
    vectors: Tuple[SparseVec, ...]
    key_index: Dict[tuple, int]
    matrix: np.ndarray  # rows = keys, columns = basis vectors

    def expand(self, u):
        """Coefficients of u in the basis; raises NotInSpan on residual."""
        extra = [k for k in u.support() if k not in self.key_index]
        rows = len(self.key_index) + len(extra)
        a = np.zeros((rows, len(self.strings)))
        a[: len(self.key_index), :] = self.matrix
        b = np.zeros(rows)
        for k, c in u.items():
            i = self.key_index.get(k)
            b[i if i is not None else len(self.key_index) + extra.index(k)] = c
        coeffs, _, _, _ = np.linalg.lstsq(a, b, rcond=None)
        residual = np.linalg.norm(a @ coeffs - b)
        if residual > RANK_TOL * max(1.0, np.linalg.norm(b)):
            raise NotInSpan(f"vector not in basis span (residual {residual:.3g})")
        return coeffs


def _substrings(lang, max_len):
    seen = set()
    for w in lang.strings():
        for n in range(1, min(max_len, len(w)) + 1):
            for i in range(len(w) - n + 1):
                seen.add(w[i:i + n])
    return seen


def select_basis(lang, max_len, reverse_lex=False):
    """Greedy scan of candidate strings; a candidate joins the basis iff its
    context vector is independent of the span so far.

    The empty string is always considered first (its context vector is the
    algebra's unity).  ``reverse_lex`` flips the tie-break order inside each
    length class; by basis independence the resulting product is the same.
    """
    if not lang.support:
        raise EmptyCorpus("language has empty support")
    candidates = sorted(
        _substrings(lang, max_len),
        key=lambda s: (len(s), s),
        reverse=False,
    )
    if reverse_lex:
        candidates.sort(key=lambda s: (-len(s), s), reverse=True)
    candidates = [()] + candidates

    strings, vectors = [], []
    key_index = {}
    matrix = np.zeros((0, 0))
    for cand in candidates:
        vec = context_vector(lang, cand)
        if vec.is_zero():
            continue
        if strings:
            basis = ContextBasis(tuple(strings), tuple(vectors), key_index, matrix)
            try:
                basis.expand(vec)
                continue  # already in span
            except NotInSpan:
                pass
        strings.append(cand)
        vectors.append(vec)
        for k in vec.support():
            key_index.setdefault(k, len(key_index))
        matrix = np.zeros((len(key_index), len(strings)))
        for j, v in enumerate(vectors):
            for k, c in v.items():
                matrix[key_index[k], j] = c

    basis = ContextBasis(tuple(strings), tuple(vectors), key_index, matrix)
    for a in sorted(lang.alphabet):
        try:
            basis.expand(context_vector(lang, (a,)))
        except NotInSpan:
            raise SpanNotReached(
                f"context vector of {a!r} not in span at max_len={max_len}"
            ) from None
    return basis


def context_product(lang, basis, u, v):
    """Product on the generated subspace: expand in the basis and map basis
    pairs to the context vector of their concatenation."""
    alphas = basis.expand(u)
    betas = basis.expand(v)
    out = SparseVec()
    for i, a in enumerate(alphas):
        if abs(a) < RANK_TOL:
            continue
        for j, b in enumerate(betas):
            if abs(b) < RANK_TOL:
                continue
            prod = context_vector(lang, basis.strings[i] + basis.strings[j])
            out = out + prod * (float(a) * float(b))
    return out


def build_context_theory(lang, max_len):
    """Context theory of a finite-average-length distribution language."""
    if classify_language(lang) != "distribution":
        raise NotDistribution("context theories require a distribution language")
    basis = select_basis(lang, max_len)

    def product(u, v):
        return context_product(lang, basis, u, v)

    return ContextTheory(
        alphabet=lang.alphabet,
        xi={a: context_vector(lang, (a,)) for a in sorted(lang.alphabet)},
        product=product,
        unity=context_vector(lang, ()),
        kind="context",
    )


def parse_language_tsv(text):
    """Language file: lines ``string<TAB>value``, string space-separated."""
    weights = {}
    for n, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if "\t" not in line:
            raise MalformedInput(f"language line {n}: missing tab")
        string, _, value = line.partition("\t")
        try:
            weights[tuple(string.split())] = float(value)
        except ValueError:
            raise MalformedInput(f"language line {n}: bad value {value!r}") from None
    return make_language(weights)


def format_language_tsv(lang):
    return "\n".join(
        f"{' '.join(x)}\t{c:.17g}" for x, c in sorted(lang.support.items())
    )


def parse_corpus(text):
    """Corpus file: one whitespace-tokenized document per line."""
    docs = [line.split() for line in text.splitlines() if line.strip()]
    return docs
