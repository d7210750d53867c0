"""Shared generators and independent oracles for the test suite."""

import numpy as np

from ctxsem import keys
from ctxsem.contextalg import make_language
from ctxsem.sparse import SparseVec


def axis_vec(values):
    return SparseVec({keys.axis(i): c for i, c in enumerate(values)})


def random_axis_vec(rng, n_axes=5, density=0.7, scale=4.0):
    return SparseVec(
        {keys.axis(i): float(rng.normal() * scale)
         for i in range(n_axes) if rng.random() < density}
    )


def random_seq_vec(rng, alphabet="ab", max_len=2, max_terms=3, scale=3.0):
    out = {}
    for _ in range(rng.integers(1, max_terms + 1)):
        length = int(rng.integers(0, max_len + 1))
        word = tuple(rng.choice(list(alphabet), size=length))
        out[keys.seq(word)] = float(rng.normal() * scale)
    return SparseVec(out)


def random_bag_vec(rng, alphabet="ab", max_len=2, max_terms=3, scale=3.0):
    out = {}
    for _ in range(rng.integers(1, max_terms + 1)):
        length = int(rng.integers(0, max_len + 1))
        word = tuple(rng.choice(list(alphabet), size=length))
        out[keys.bag(word)] = float(rng.normal() * scale)
    return SparseVec(out)


def random_tensor_vec(rng, n_axes=3, max_rank=2, max_terms=3, scale=3.0):
    out = {}
    for _ in range(rng.integers(1, max_terms + 1)):
        rank = int(rng.integers(0, max_rank + 1))
        key = keys.seq(tuple(str(int(a)) for a in rng.integers(0, n_axes, rank)))
        out[key] = float(rng.normal() * scale)
    return SparseVec(out)


def random_language(rng, max_alphabet=4, max_support=6, max_len=4):
    alphabet = list("abcd")[: int(rng.integers(2, max_alphabet + 1))]
    strings = set()
    for _ in range(int(rng.integers(1, max_support + 1))):
        length = int(rng.integers(1, max_len + 1))
        strings.add(tuple(rng.choice(alphabet, size=length)))
    weights = rng.random(len(strings)) + 0.05
    weights /= weights.sum()
    return make_language(dict(zip(sorted(strings), weights)))


def brute_force_context(lang, x):
    """Independent oracle for context vectors: explicit split enumeration."""
    x = tuple(x)
    out = {}
    for w, c in lang.support.items():
        for i in range(len(w) + 1):
            for j in range(i, len(w) + 1):
                if w[i:j] == x:
                    k = keys.pair(w[:i], w[j:])
                    out[k] = out.get(k, 0.0) + c
    return SparseVec(out)


def subsequences(x):
    """All subsequences of x (as tuples), including the empty one."""
    out = {()}
    for w in x:
        out |= {s + (w,) for s in out}
    return out


def additive_matrix_oracle(u, v, n_axes):
    """Multiply the (n+1)-order matrix embeddings and read back the vector."""
    def embed(vec):
        m = np.zeros((n_axes, n_axes))
        alpha = vec[keys.axis(0)]
        np.fill_diagonal(m, alpha)
        for i in range(1, n_axes):
            m[0, i] = vec[keys.axis(i)]
        return m

    prod = embed(u) @ embed(v)
    out = {keys.axis(0): prod[0, 0]}
    for i in range(1, n_axes):
        out[keys.axis(i)] = prod[0, i]
    return SparseVec(out)
