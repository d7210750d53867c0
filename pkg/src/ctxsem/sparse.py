"""Finitely supported real vectors over a countable structured basis.

The same carrier serves finite-dimensional spaces (axis keys), summable
functions on a free monoid (seq keys), their commutative quotient (bag
keys), functions on pairs of strings (pair keys) and the document space
(doc keys).  Lattice operations are componentwise against the implicit
zero outside the support, which makes the positive cone behave like a
space of discrete measures: the 1-norm is additive on disjoint positive
vectors.
"""

import math

from .errors import NotPositive, ZeroAntecedent
from .keys import format_key, parse_key

# coefficients below this are dropped on construction
ZERO_TOL = 1e-12
# relative tolerance for coefficient equality
EQ_RTOL = 1e-9


class SparseVec:
    """Immutable finitely-supported vector: a map from basis key to nonzero real."""

    __slots__ = ("_data",)

    def __init__(self, data=None):
        d = {}
        if data:
            for k, c in (data.items() if hasattr(data, "items") else data):
                c = d.get(k, 0.0) + float(c)
                if abs(c) < ZERO_TOL:
                    d.pop(k, None)
                else:
                    d[k] = c
        self._data = d

    @classmethod
    def single(cls, key, coeff=1.0):
        return cls({key: coeff})

    @classmethod
    def zero(cls):
        return cls()

    def support(self):
        return self._data.keys()

    def items(self):
        return self._data.items()

    def __getitem__(self, key):
        return self._data.get(key, 0.0)

    def __len__(self):
        return len(self._data)

    def __bool__(self):
        return bool(self._data)

    def __iter__(self):
        return iter(self._data)

    def is_zero(self):
        return not self._data

    def is_nonnegative(self):
        return all(c >= -ZERO_TOL for c in self._data.values())

    def __add__(self, other):
        return linear_combine(1.0, self, 1.0, other)

    def __sub__(self, other):
        return linear_combine(1.0, self, -1.0, other)

    def __mul__(self, scalar):
        return SparseVec({k: scalar * c for k, c in self._data.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1.0

    def __eq__(self, other):
        if not isinstance(other, SparseVec):
            return NotImplemented
        for k in self._data.keys() | other._data.keys():
            a, b = self[k], other[k]
            if abs(a - b) > EQ_RTOL * max(1.0, abs(a), abs(b)):
                return False
        return True

    __hash__ = None

    def __repr__(self):
        terms = ", ".join(
            f"{format_key(k)}: {c:g}" for k, c in sorted(self._data.items())
        )
        return f"SparseVec({{{terms}}})"


def linear_combine(a, u, b, v):
    """Return a*u + b*v; zero coefficients are dropped."""
    out = {}
    for k, c in u.items():
        out[k] = a * c
    for k, c in v.items():
        out[k] = out.get(k, 0.0) + b * c
    return SparseVec(out)


def meet(u, v):
    """Componentwise minimum (absent key counts as 0)."""
    return SparseVec(
        {k: min(u[k], v[k]) for k in u.support() | v.support()}
    )


def join(u, v):
    """Componentwise maximum (absent key counts as 0)."""
    return SparseVec(
        {k: max(u[k], v[k]) for k in u.support() | v.support()}
    )


def pos_part(u):
    return SparseVec({k: c for k, c in u.items() if c > 0})


def neg_part(u):
    return SparseVec({k: -c for k, c in u.items() if c < 0})


def norm(u, p=1):
    if p == 1:
        return sum(abs(c) for _, c in u.items())
    if p == 2:
        return math.sqrt(sum(c * c for _, c in u.items()))
    if p == math.inf or p == "inf":
        return max((abs(c) for _, c in u.items()), default=0.0)
    raise ValueError(f"unsupported norm order: {p!r}")


def inner(u, v):
    if len(u) > len(v):
        u, v = v, u
    return sum(c * v[k] for k, c in u.items())


def degree_of_entailment(u, v):
    """Conditional probability of v given u: ||u /\\ v||_1 / ||u||_1."""
    if not u.is_nonnegative() or not v.is_nonnegative():
        raise NotPositive("degree of entailment requires nonnegative vectors")
    nu = norm(u, 1)
    if nu <= ZERO_TOL:
        raise ZeroAntecedent("antecedent has zero 1-norm")
    return norm(meet(u, v), 1) / nu


def from_axes(values):
    """Build an axis-keyed vector from an iterable of coefficients."""
    return SparseVec({("axis", i): c for i, c in enumerate(values)})


def parse_vector_literal(text):
    """Parse the line-oriented vector literal format: ``key<TAB>coefficient``."""
    pairs = []
    for line in text.splitlines():
        line = line.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        key_text, _, coeff_text = line.partition("\t")
        pairs.append((parse_key(key_text), float(coeff_text)))
    return SparseVec(pairs)


def format_vector_literal(u):
    return "\n".join(
        f"{format_key(k)}\t{c:.17g}" for k, c in sorted(u.items())
    )
