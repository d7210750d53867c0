"""Desk-scale latent Dirichlet allocation and the projection entailment model.

Training is a seeded collapsed Gibbs sampler over per-token topic
assignments; the topic-word matrix is read off the smoothed counts.  The
entailment model treats a word set as a projection onto documents
containing all its words and estimates the projection's probability by
Monte-Carlo integration over the Dirichlet topic mixture.
"""

from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np

from .errors import (
    EmptyCorpus,
    IndexOutOfRange,
    MalformedInput,
    NotSimplex,
    UnknownWord,
    ZeroAntecedent,
)

SIMPLEX_TOL = 1e-6


@dataclass(frozen=True)
class LdaModel:
    alpha: np.ndarray          # (k,) strictly positive
    beta: np.ndarray           # (k, V) row-stochastic
    vocab: Tuple[str, ...]
    word_index: Dict[str, int]

    @property
    def k(self):
        return len(self.alpha)

    def index_of(self, word):
        try:
            return self.word_index[word]
        except KeyError:
            raise UnknownWord(word) from None


def _make_model(alpha, beta, vocab):
    alpha = np.asarray(alpha, dtype=float)
    beta = np.asarray(beta, dtype=float)
    if np.any(alpha <= 0):
        raise MalformedInput("alpha must be strictly positive")
    if np.any(np.abs(beta.sum(axis=1) - 1.0) > 1e-9):
        raise MalformedInput("beta rows must sum to 1")
    vocab = tuple(vocab)
    return LdaModel(
        alpha=alpha,
        beta=beta,
        vocab=vocab,
        word_index={w: i for i, w in enumerate(vocab)},
    )


@dataclass(frozen=True)
class SamplerConfig:
    iterations: int = 200
    burn_in: int = 50
    seed: int = 0
    alpha_sym: float = None  # default min(50/k, 1.0)
    beta_smooth: float = 0.01

    def __post_init__(self):
        if not self.iterations > self.burn_in >= 0:
            raise MalformedInput("need iterations > burn_in >= 0")


@dataclass(frozen=True)
class McConfig:
    samples: int = 1000
    doc_length: int = 1000
    seed: int = 0

    def __post_init__(self):
        if self.samples < 1 or self.doc_length < 1:
            raise MalformedInput("need samples >= 1 and doc_length >= 1")


def train_lda(corpus, k, cfg=SamplerConfig()):
    """Collapsed Gibbs training; deterministic for a fixed config seed."""
    docs = [list(d) for d in corpus if d]
    if not docs:
        raise EmptyCorpus("cannot train on an empty corpus")
    if k < 1:
        raise MalformedInput("need at least one topic")
    vocab = tuple(sorted({w for d in docs for w in d}))
    word_index = {w: i for i, w in enumerate(vocab)}
    v = len(vocab)
    alpha_sym = cfg.alpha_sym if cfg.alpha_sym is not None else min(50.0 / k, 1.0)
    smooth = cfg.beta_smooth

    rng = np.random.default_rng(cfg.seed)
    tokens = [(d, word_index[w]) for d, doc in enumerate(docs) for w in doc]
    z = rng.integers(0, k, size=len(tokens))
    n_dk = np.zeros((len(docs), k))
    n_kw = np.zeros((k, v))
    n_k = np.zeros(k)
    for (d, w), t in zip(tokens, z):
        n_dk[d, t] += 1
        n_kw[t, w] += 1
        n_k[t] += 1

    acc_kw = np.zeros((k, v))
    for sweep in range(cfg.iterations):
        for i, (d, w) in enumerate(tokens):
            t = z[i]
            n_dk[d, t] -= 1
            n_kw[t, w] -= 1
            n_k[t] -= 1
            p = (n_dk[d] + alpha_sym) * (n_kw[:, w] + smooth) / (n_k + v * smooth)
            cum = np.cumsum(p)
            t = int(np.searchsorted(cum, rng.random() * cum[-1], side="right"))
            t = min(t, k - 1)
            z[i] = t
            n_dk[d, t] += 1
            n_kw[t, w] += 1
            n_k[t] += 1
        if sweep >= cfg.burn_in:
            acc_kw += n_kw

    counts = acc_kw / (cfg.iterations - cfg.burn_in) + smooth
    beta = counts / counts.sum(axis=1, keepdims=True)
    alpha = np.full(k, alpha_sym)
    return _make_model(alpha, beta, vocab)


def topic_marginal(model, i):
    """Marginal topic probability alpha_i / sum(alpha)."""
    if not 0 <= i < model.k:
        raise IndexOutOfRange(f"topic {i} out of range for k={model.k}")
    return float(model.alpha[i] / model.alpha.sum())


def word_prob_given_theta(model, word, theta, n):
    """Probability the word occurs at least once in a document of length n:
    1 - (1 - sum_z p(word|z) p(z|theta)) ** n."""
    theta = np.asarray(theta, dtype=float)
    if theta.shape != (model.k,) or np.any(theta < -SIMPLEX_TOL) or \
            abs(theta.sum() - 1.0) > SIMPLEX_TOL:
        raise NotSimplex(f"theta is not on the {model.k}-simplex: {theta}")
    w = model.index_of(word)
    per_token = float(model.beta[:, w] @ theta)
    return 1.0 - (1.0 - per_token) ** n


def _theta_samples(model, cfg):
    rng = np.random.default_rng(cfg.seed)
    return rng.dirichlet(model.alpha, size=cfg.samples)


def _products(model, words, thetas, n):
    idx = [model.index_of(w) for w in words]
    per_token = thetas @ model.beta[:, idx]  # (M, len(words))
    return np.prod(1.0 - (1.0 - per_token) ** n, axis=1)


def phi_projection(model, words, cfg=McConfig()):
    """Monte-Carlo estimate of the probability that a random document
    contains every word, with the standard error of the mean."""
    words = sorted(set(words))
    if not words:
        return 1.0, 0.0
    samples = _products(model, words, _theta_samples(model, cfg), cfg.doc_length)
    est = float(samples.mean())
    se = float(samples.std(ddof=1) / np.sqrt(len(samples))) if len(samples) > 1 else 0.0
    return est, se


def entail_lda(model, x, y, cfg=McConfig(), oov_skip=False):
    """Degree of entailment phi(P_x /\\ P_y) / phi(P_x), with both integrals
    estimated on the same Dirichlet sample stream."""
    xs, ys = list(x), list(y)
    if oov_skip:
        xs = [w for w in xs if w in model.word_index]
        ys = [w for w in ys if w in model.word_index]
    wx = sorted(set(xs))
    wxy = sorted(set(xs) | set(ys))
    if not wx:
        return 1.0
    thetas = _theta_samples(model, cfg)
    denom_samples = _products(model, wx, thetas, cfg.doc_length)
    denom = float(denom_samples.mean())
    if denom <= 0.0:
        raise ZeroAntecedent("phi(P_x) estimated as zero")
    if wxy == wx:
        return 1.0
    num = float(_products(model, wxy, thetas, cfg.doc_length).mean())
    return num / denom


def save_model(model, path):
    """TSV dump: header, alpha line, then one ``word beta-column`` line per word."""
    with open(path, "w", encoding="utf-8") as f:
        f.write(f"ctxsem-lda\t1\t{model.k}\t{len(model.vocab)}\n")
        f.write("\t".join(f"{a:.17g}" for a in model.alpha) + "\n")
        for i, w in enumerate(model.vocab):
            cols = "\t".join(f"{c:.17g}" for c in model.beta[:, i])
            f.write(f"{w}\t{cols}\n")


def load_model(path):
    with open(path, "r", encoding="utf-8") as f:
        lines = f.read().splitlines()
    try:
        magic, version, k, v = lines[0].split("\t")
        if magic != "ctxsem-lda":
            raise ValueError
        k, v = int(k), int(v)
        alpha = np.array([float(a) for a in lines[1].split("\t")])
        vocab, cols = [], []
        for line in lines[2:2 + v]:
            parts = line.split("\t")
            vocab.append(parts[0])
            cols.append([float(c) for c in parts[1:]])
        beta = np.array(cols).T
    except (ValueError, IndexError):
        raise MalformedInput(f"not a ctxsem LDA model file: {path}") from None
    return _make_model(alpha, beta, vocab)
