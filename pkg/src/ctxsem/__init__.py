"""Context-theoretic semantics: sparse vector lattices, composition
algebras, corpus-derived context algebras, projection entailment models
and pregroup typed tensors."""

from .sparse import (
    SparseVec,
    degree_of_entailment,
    inner,
    join,
    linear_combine,
    meet,
    neg_part,
    norm,
    pos_part,
)

__all__ = [
    "SparseVec",
    "degree_of_entailment",
    "inner",
    "join",
    "linear_combine",
    "meet",
    "neg_part",
    "norm",
    "pos_part",
]

__version__ = "0.1.0"
