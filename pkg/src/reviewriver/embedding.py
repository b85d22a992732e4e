"""Per-app word embeddings via skip-gram with negative sampling.

The same opinion word can flip polarity between apps ("loud" is a bug for a
video app and a feature for a weather-alert app), so vectors are trained on
each app's own reviews, optionally warm-started from a pretrained text
vector file.

Objective per (center c, context o) pair, negatives n_1..n_k drawn from the
unigram^(3/4) distribution:

    loss = -log sigma(u_o . v_c) - sum_i log sigma(-u_{n_i} . v_c)

Training is single-threaded and fully deterministic for a given seed; the
analytic gradients are pinned against central finite differences in the
test suite.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .errors import DimMismatch, EmptyVocab, OutOfVocab, ZeroVector
from .textprep import CleanReview

SMALL_CORPUS_TOKENS = 10_000  # below this, min_count falls back to 1


@dataclass
class SgnsConfig:
    dim: int = 100
    window: int = 5
    negatives: int = 5
    epochs: int = 5
    lr0: float = 0.025
    min_count: int = 5
    seed: int = 1


@dataclass
class EmbeddingModel:
    dim: int
    vocab: dict[str, int]
    vectors: np.ndarray
    context_vectors: np.ndarray | None = None
    epoch_losses: list[float] = field(default_factory=list)

    def __contains__(self, token: str) -> bool:
        return token in self.vocab

    def vector(self, token: str) -> np.ndarray:
        if token not in self.vocab:
            raise OutOfVocab(token)
        return self.vectors[self.vocab[token]]


def build_vocab(corpus: list[CleanReview], min_count: int) -> dict[str, int]:
    """Tokens with frequency >= min_count, indexed by (freq desc, token asc)."""
    if min_count < 1:
        raise ValueError("min_count must be >= 1")
    counts = Counter(tok for review in corpus for tok in review.tokens)
    kept = sorted(
        (tok for tok, n in counts.items() if n >= min_count),
        key=lambda tok: (-counts[tok], tok),
    )
    if not kept:
        raise EmptyVocab("no token meets the min_count threshold")
    return {tok: i for i, tok in enumerate(kept)}


def effective_min_count(config: SgnsConfig, total_tokens: int) -> int:
    return 1 if total_tokens < SMALL_CORPUS_TOKENS else config.min_count


def _sigmoid(x: float) -> float:
    if x >= 0:
        return 1.0 / (1.0 + np.exp(-x))
    z = np.exp(x)
    return z / (1.0 + z)


def pair_loss(v_c: np.ndarray, u_o: np.ndarray, u_negs: np.ndarray) -> float:
    loss = -np.log(_sigmoid(float(u_o @ v_c)))
    for u_n in u_negs:
        loss -= np.log(_sigmoid(-float(u_n @ v_c)))
    return float(loss)


def pair_gradients(
    v_c: np.ndarray, u_o: np.ndarray, u_negs: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Analytic gradients of pair_loss w.r.t. v_c, u_o and each negative row."""
    g_pos = _sigmoid(float(u_o @ v_c)) - 1.0  # sigma(x) - 1
    grad_v = g_pos * u_o
    grad_o = g_pos * v_c
    grad_negs = np.empty_like(u_negs)
    for i, u_n in enumerate(u_negs):
        g_neg = _sigmoid(float(u_n @ v_c))  # sigma(x) for negatives
        grad_v = grad_v + g_neg * u_n
        grad_negs[i] = g_neg * v_c
    return grad_v, grad_o, grad_negs


def _negative_table(corpus: list[CleanReview], vocab: dict[str, int]) -> np.ndarray:
    counts = np.zeros(len(vocab))
    for review in corpus:
        for tok in review.tokens:
            idx = vocab.get(tok)
            if idx is not None:
                counts[idx] += 1
    weights = counts**0.75
    return np.cumsum(weights / weights.sum())


def train_sgns(
    corpus: list[CleanReview],
    init: dict[str, np.ndarray] | None = None,
    config: SgnsConfig | None = None,
) -> EmbeddingModel:
    """Train SGNS over the review token streams.

    Vectors are float64.  Input vectors start from `init` rows where the
    vocabulary overlaps and uniform [-0.5/d, 0.5/d] otherwise; context
    vectors start at zero.  The learning rate decays linearly from lr0 to
    lr0/100 over all (center, context) updates.
    """
    config = config or SgnsConfig()
    if not corpus:
        raise EmptyVocab("empty corpus")
    if init:
        dims = {len(v) for v in init.values()}
        if dims != {config.dim}:
            raise DimMismatch(f"init vectors have dim {dims}, config.dim={config.dim}")

    total_tokens = sum(len(r.tokens) for r in corpus)
    vocab = build_vocab(corpus, effective_min_count(config, total_tokens))
    rng = np.random.default_rng(config.seed)
    d = config.dim

    vectors = rng.uniform(-0.5 / d, 0.5 / d, size=(len(vocab), d))
    if init:
        for tok, idx in vocab.items():
            if tok in init:
                vectors[idx] = np.asarray(init[tok], dtype=np.float64)
    context = np.zeros((len(vocab), d))

    sentences = [
        [vocab[t] for t in review.tokens if t in vocab] for review in corpus
    ]
    sentences = [s for s in sentences if len(s) >= 1]
    cumulative = _negative_table(corpus, vocab)

    pair_count = 0
    for sent in sentences:
        for i in range(len(sent)):
            lo = max(0, i - config.window)
            hi = min(len(sent), i + config.window + 1)
            pair_count += hi - lo - 1
    total_updates = max(1, pair_count * config.epochs)

    done = 0
    lr_floor = config.lr0 / 100.0
    epoch_losses = []
    for _ in range(config.epochs):
        epoch_loss = 0.0
        epoch_pairs = 0
        for sent in sentences:
            for i, c in enumerate(sent):
                lo = max(0, i - config.window)
                hi = min(len(sent), i + config.window + 1)
                for j in range(lo, hi):
                    if j == i:
                        continue
                    o = sent[j]
                    negs = np.searchsorted(
                        cumulative, rng.random(config.negatives), side="right"
                    )
                    lr = max(config.lr0 * (1.0 - done / total_updates), lr_floor)
                    v_c = vectors[c]
                    u_o = context[o]
                    u_negs = context[negs]
                    epoch_loss += pair_loss(v_c, u_o, u_negs)
                    epoch_pairs += 1
                    grad_v, grad_o, grad_negs = pair_gradients(v_c, u_o, u_negs)
                    vectors[c] = v_c - lr * grad_v
                    context[o] = u_o - lr * grad_o
                    # negatives may repeat; apply sequentially so repeats accumulate
                    for n_idx, g in zip(negs, grad_negs):
                        context[n_idx] = context[n_idx] - lr * g
                    done += 1
        epoch_losses.append(epoch_loss / max(1, epoch_pairs))

    return EmbeddingModel(
        dim=d,
        vocab=vocab,
        vectors=vectors,
        context_vectors=context,
        epoch_losses=epoch_losses,
    )


def cosine(model: EmbeddingModel, w1: str, w2: str) -> float:
    v1, v2 = model.vector(w1), model.vector(w2)
    n1, n2 = float(np.linalg.norm(v1)), float(np.linalg.norm(v2))
    if n1 == 0.0 or n2 == 0.0:
        raise ZeroVector(f"zero vector for {w1 if n1 == 0.0 else w2!r}")
    return float(v1 @ v2) / (n1 * n2)


def save_vectors_text(model: EmbeddingModel) -> str:
    """One `token v1 .. vd` row per line; repr floats round-trip exactly."""
    lines = []
    for tok in sorted(model.vocab, key=model.vocab.get):
        row = model.vectors[model.vocab[tok]]
        lines.append(tok + " " + " ".join(repr(float(x)) for x in row))
    return "\n".join(lines) + "\n"


def load_vectors_text(text: str) -> dict[str, np.ndarray]:
    vectors: dict[str, np.ndarray] = {}
    dim = None
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) < 2:
            raise DimMismatch(f"line {line_no}: no vector components")
        token, values = parts[0], parts[1:]
        if dim is None:
            dim = len(values)
        elif len(values) != dim:
            raise DimMismatch(f"line {line_no}: expected {dim} components, got {len(values)}")
        try:
            vectors[token] = np.array([float(v) for v in values])
        except ValueError:
            raise DimMismatch(f"line {line_no}: non-numeric component") from None
    return vectors


def model_from_vectors(vectors: dict[str, np.ndarray]) -> EmbeddingModel:
    """Read-only model from a saved vector file (context vectors discarded)."""
    if not vectors:
        raise EmptyVocab("no vectors")
    tokens = sorted(vectors)
    dim = len(next(iter(vectors.values())))
    matrix = np.stack([np.asarray(vectors[t], dtype=np.float64) for t in tokens])
    return EmbeddingModel(dim=dim, vocab={t: i for i, t in enumerate(tokens)}, vectors=matrix)
