"""Composition products over sparse vectors and assembly of context theories.

Each product makes the carrier an associative algebra.  The concrete
products here (pointwise, additive, tensor, free-monoid convolution and
its commutative quotient) are positive: products of nonnegative vectors
stay nonnegative.  Corpus-derived products need not be; see contextalg.
"""

from dataclasses import dataclass, field
from typing import Callable, FrozenSet, Mapping

from . import keys
from .errors import KeyVariantMismatch, UnknownWord
from .sparse import SparseVec, degree_of_entailment


def _require_tag(u, tag, what):
    for k in u.support():
        if keys.tag_of(k) != tag:
            raise KeyVariantMismatch(
                f"{what} needs {tag!r} keys, got {keys.tag_of(k)!r}"
            )


def pointwise_product(u, v):
    """Componentwise product on axis-keyed vectors."""
    _require_tag(u, keys.AXIS, "pointwise product")
    _require_tag(v, keys.AXIS, "pointwise product")
    if len(u) > len(v):
        u, v = v, u
    return SparseVec({k: c * v[k] for k, c in u.items()})


def additive_product(u, v):
    """Vector addition as an algebra product; axis 0 carries the scalar slot.

    (a, u1..un) boxplus (b, v1..vn) = (ab, a*v1 + b*u1, ..., a*vn + b*un).
    """
    _require_tag(u, keys.AXIS, "additive product")
    _require_tag(v, keys.AXIS, "additive product")
    slot = keys.axis(0)
    a, b = u[slot], v[slot]
    out = {slot: a * b}
    for k, c in u.items():
        if k != slot:
            out[k] = out.get(k, 0.0) + b * c
    for k, c in v.items():
        if k != slot:
            out[k] = out.get(k, 0.0) + a * c
    return SparseVec(out)


def _tensor_key(k):
    # lift a rank-1 axis key to a seq-of-axes key; seq keys pass through
    tag = keys.tag_of(k)
    if tag == keys.AXIS:
        return keys.seq([str(k[1])])
    if tag == keys.SEQ:
        return k
    raise KeyVariantMismatch(f"tensor product needs axis or seq keys, got {tag!r}")


def tensor_alg_product(u, v):
    """Graded concatenation product of the tensor algebra.

    Keys are sequences of axis indices; the empty sequence is the scalar
    component and the unity.  Axis-keyed inputs are treated as rank 1.
    """
    out = {}
    for ku, cu in u.items():
        ku = _tensor_key(ku)
        for kv, cv in v.items():
            kv = _tensor_key(kv)
            k = keys.seq(ku[1] + kv[1])
            out[k] = out.get(k, 0.0) + cu * cv
    return SparseVec(out)


def convolution(u, v):
    """Free-monoid convolution: (f.g)(x) = sum over yz = x of f(y)g(z)."""
    _require_tag(u, keys.SEQ, "convolution")
    _require_tag(v, keys.SEQ, "convolution")
    out = {}
    for ku, cu in u.items():
        for kv, cv in v.items():
            k = keys.seq(ku[1] + kv[1])
            out[k] = out.get(k, 0.0) + cu * cv
    return SparseVec(out)


def commutative_convolution(u, v):
    """Convolution on the free commutative monoid: keys combine by multiset union."""
    _require_tag(u, keys.BAG, "commutative convolution")
    _require_tag(v, keys.BAG, "commutative convolution")
    out = {}
    for ku, cu in u.items():
        for kv, cv in v.items():
            k = keys.bag(ku[1] + kv[1])
            out[k] = out.get(k, 0.0) + cu * cv
    return SparseVec(out)


def subsequence_xi(word):
    """Word embedding for subsequence matching: (e_word + e_empty) / 2."""
    return SparseVec({keys.seq([word]): 0.5, keys.seq([]): 0.5})


def overlap_xi(word):
    """Word embedding for lexical overlap: the bag-keyed twin of subsequence_xi."""
    return SparseVec({keys.bag([word]): 0.5, keys.bag([]): 0.5})


@dataclass(frozen=True)
class ContextTheory:
    """Alphabet, word embedding, composition product and lattice embedding.

    psi defaults to the identity: the algebra's own coefficients are read
    as coordinates in the ambient ordered space.
    """

    alphabet: FrozenSet[str]
    xi: Mapping[str, SparseVec]
    product: Callable[[SparseVec, SparseVec], SparseVec]
    unity: SparseVec
    kind: str = "custom"
    psi: Callable[[SparseVec], SparseVec] = field(default=lambda u: u)

    def lift_word(self, word):
        try:
            return self.xi[word]
        except KeyError:
            raise UnknownWord(word) from None


def lift_string(theory, words):
    """Fold the theory's product over the word embeddings, left to right."""
    acc = theory.unity
    for i, w in enumerate(words):
        x = theory.lift_word(w)
        acc = x if i == 0 else theory.product(acc, x)
    return acc


def string_entailment(theory, x, y):
    """Degree of entailment between strings under the theory's embedding."""
    u = theory.psi(lift_string(theory, x))
    v = theory.psi(lift_string(theory, y))
    return degree_of_entailment(u, v)


def pointwise_theory(vectors):
    """Theory over a finite axis set with pointwise product.

    Unity is the all-ones vector over the axes appearing in any word vector.
    """
    axes = set()
    for u in vectors.values():
        axes.update(u.support())
    unity = SparseVec({k: 1.0 for k in axes})
    return ContextTheory(
        alphabet=frozenset(vectors),
        xi=dict(vectors),
        product=pointwise_product,
        unity=unity,
        kind="pointwise",
    )


def additive_theory(vectors):
    """Theory with the additive product; axis 0 of each vector is the scalar slot."""
    unity = SparseVec({keys.axis(0): 1.0})
    return ContextTheory(
        alphabet=frozenset(vectors),
        xi=dict(vectors),
        product=additive_product,
        unity=unity,
        kind="additive",
    )


def tensor_theory(vectors):
    """Theory with the tensor-algebra product; unity is the scalar component."""
    unity = SparseVec({keys.seq([]): 1.0})
    return ContextTheory(
        alphabet=frozenset(vectors),
        xi=dict(vectors),
        product=tensor_alg_product,
        unity=unity,
        kind="tensor",
    )


def subsequence_theory(alphabet):
    unity = SparseVec({keys.seq([]): 1.0})
    return ContextTheory(
        alphabet=frozenset(alphabet),
        xi={a: subsequence_xi(a) for a in alphabet},
        product=convolution,
        unity=unity,
        kind="subsequence",
    )


def overlap_theory(alphabet):
    unity = SparseVec({keys.bag([]): 1.0})
    return ContextTheory(
        alphabet=frozenset(alphabet),
        xi={a: overlap_xi(a) for a in alphabet},
        product=commutative_convolution,
        unity=unity,
        kind="overlap",
    )
