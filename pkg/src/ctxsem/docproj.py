"""Document-occurrence projections and the counting entailment model.

A word's context is the set of documents it occurs in.  Word sets map to
commuting 0/1 diagonal projections on the document space; the linear
functional phi reads off their probability under the uniform document
distribution, and the degree of entailment is a ratio of such
probabilities.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet

from . import keys
from .errors import EmptyCorpus, ZeroAntecedent
from .sparse import SparseVec, neg_part, norm, pos_part


@dataclass(frozen=True)
class DocumentIndex:
    """Posting lists: word -> set of document ids containing it."""

    doc_count: int
    postings: Dict[str, FrozenSet[int]]

    def docs_for(self, word):
        return self.postings.get(word, frozenset())


def index_corpus(docs):
    if not docs:
        raise EmptyCorpus("cannot index an empty corpus")
    postings = {}
    for i, d in enumerate(docs):
        for w in set(d):
            postings.setdefault(w, set()).add(i)
    return DocumentIndex(
        doc_count=len(docs),
        postings={w: frozenset(s) for w, s in postings.items()},
    )


def projection(index, words):
    """Indicator of documents containing every word; empty set = identity."""
    docs = set(range(index.doc_count))
    for w in words:
        docs &= index.docs_for(w)
    return SparseVec({keys.doc(d): 1.0 for d in docs})


def phi(index, u):
    """Context-theoretic probability of a diagonal operator under uniform p.

    phi(U) = ||U+ p||_1 - ||U- p||_1 with p(d) = 1/|D|; for an indicator
    this is the fraction of documents in its support.
    """
    p = 1.0 / index.doc_count
    return (norm(pos_part(u), 1) - norm(neg_part(u), 1)) * p


def entail_docproj(index, x, y):
    """Fraction of documents containing all of x that also contain all of y."""
    px = projection(index, set(x))
    denom = phi(index, px)
    if denom <= 0.0:
        raise ZeroAntecedent("no document contains every word of the antecedent")
    pxy = projection(index, set(x) | set(y))
    return phi(index, pxy) / denom
