"""Version-sensitive topic modeling with emerging-issue detection.

Each app version gets its own LDA fit by collapsed Gibbs sampling, but the
topic-word prior for version t is chained from the learned topic-word
distributions of the previous W versions:

    beta_k(w) = beta0 + s * sum_{i=1..min(W, available)} gamma_i * phi_k^{t-i}(w)
    gamma_i   = rho^i / sum_j rho^j

so topic identity is carried across versions by index (no matching step).
The first version, or W=0, reduces to plain LDA with a symmetric beta0
prior.  A topic is emerging at version t when its mean document proportion
exceeds its own history mean by lambda standard deviations (stdev floored
at 0.01 so flat histories cannot flag everything).

The Gibbs sweep is a numba-jitted kernel (pure-Python twin kept for
environments without numba; both produce bit-identical chains given the
same uniform draws).
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .errors import EmptyCorpus, KTooLarge
from .sentiment import LABELS, SentimentScorer
from .stopwords import STEMMED_STOPWORDS
from .textprep import CleanReview

TOP_WORDS = 30
MAX_PHRASE_LABELS = 3
MAX_SENTENCES = 3
MIN_SENTENCE_TOKENS = 3
MAX_SENTENCE_TOKENS = 30
MIN_BIGRAM_COUNT = 2
MIN_VOCAB_FREQ = 2
SIGMA_FLOOR = 0.01


@dataclass
class TopicModelConfig:
    K: int = 10
    W: int = 3
    alpha: float | None = None  # defaults to 50/K
    beta0: float = 0.01
    chain_decay: float = 0.5  # rho
    prior_strength: float = 10.0  # s
    iterations: int = 500
    seed: int = 42

    def alpha_value(self) -> float:
        return 50.0 / self.K if self.alpha is None else self.alpha


@dataclass
class TopicState:
    version_index: int
    K: int
    vocab: list[str]
    phi: np.ndarray  # (K, V) rows sum to 1
    theta: np.ndarray  # (D, K) rows sum to 1
    doc_review_ids: list[int]
    word_index: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if not self.word_index:
            self.word_index = {w: i for i, w in enumerate(self.vocab)}

    def mean_theta(self) -> np.ndarray:
        return self.theta.mean(axis=0)

    def top_words(self, k: int, n: int = TOP_WORDS) -> list[tuple[str, float]]:
        """Top-n (word, probability) pairs, probability desc, ties alphabetical."""
        row = self.phi[k]
        order = sorted(range(len(self.vocab)), key=lambda v: (-row[v], self.vocab[v]))
        return [(self.vocab[v], float(row[v])) for v in order[: min(n, len(self.vocab))]]


@dataclass
class PhraseLabel:
    text: str  # two stems joined by a space
    count: int
    score: float
    sentiment_score: float = 0.0  # mean word score of in-vocab constituents


@dataclass
class TopicSummary:
    topic_id: int
    top_words: list[tuple[str, float]]
    phrase_labels: list[PhraseLabel]
    sentences: list[str]
    emerging: bool
    sentiment_label: str
    word_sentiments: dict[str, tuple[float, str]]
    scorable: bool = True
    opinion_words: list[str] = field(default_factory=list)


# --- Gibbs kernel ----------------------------------------------------------

def _gibbs_sweep_py(doc_of, word_of, z, n_dk, n_kw, n_k, alpha, beta_kw, beta_sum, uniforms):
    K = n_kw.shape[0]
    for i in range(doc_of.shape[0]):
        d = doc_of[i]
        w = word_of[i]
        old = z[i]
        n_dk[d, old] -= 1
        n_kw[old, w] -= 1
        n_k[old] -= 1
        total = 0.0
        for k in range(K):
            total += (n_dk[d, k] + alpha) * (n_kw[k, w] + beta_kw[k, w]) / (n_k[k] + beta_sum[k])
        target = uniforms[i] * total
        acc = 0.0
        new = K - 1
        for k in range(K):
            acc += (n_dk[d, k] + alpha) * (n_kw[k, w] + beta_kw[k, w]) / (n_k[k] + beta_sum[k])
            if acc > target:
                new = k
                break
        z[i] = new
        n_dk[d, new] += 1
        n_kw[new, w] += 1
        n_k[new] += 1


try:  # pragma: no cover - exercised indirectly
    from numba import njit

    _gibbs_sweep = njit(cache=True)(_gibbs_sweep_py)
except ImportError:  # pragma: no cover
    _gibbs_sweep = _gibbs_sweep_py


def _lgamma_sum(arr: np.ndarray) -> float:
    return float(sum(math.lgamma(x) for x in arr.ravel()))


def _joint_log_likelihood(n_dk, n_kw, n_k, doc_lens, alpha, beta_kw, beta_sum) -> float:
    """Collapsed joint log p(w, z) up to constants; used as a sampler sanity metric."""
    K = n_kw.shape[0]
    ll = _lgamma_sum(n_kw + beta_kw) - _lgamma_sum(n_k + beta_sum)
    ll += _lgamma_sum(n_dk + alpha) - _lgamma_sum(doc_lens + K * alpha)
    return ll


def build_modeling_vocab(docs_tokens: list[list[str]], min_freq: int = MIN_VOCAB_FREQ) -> list[str]:
    """Stemmed tokens minus stopwords, corpus frequency >= min_freq, sorted."""
    counts = Counter(
        tok
        for tokens in docs_tokens
        for tok in tokens
        if tok not in STEMMED_STOPWORDS
    )
    return sorted(tok for tok, n in counts.items() if n >= min_freq)


def _chained_prior(
    vocab: list[str], K: int, prev: list[TopicState], config: TopicModelConfig
) -> np.ndarray:
    beta_kw = np.full((K, len(vocab)), config.beta0)
    window = prev[-config.W :] if config.W > 0 else []
    if not window:
        return beta_kw
    n = len(window)
    rho = config.chain_decay
    norm = sum(rho**j for j in range(1, n + 1))
    # window[-1] is version t-1 (i=1), window[-2] is t-2, ...
    for i in range(1, n + 1):
        state = window[-i]
        gamma = rho**i / norm
        shared = [(v, state.word_index[w]) for v, w in enumerate(vocab) if w in state.word_index]
        if not shared:
            continue
        ours, theirs = zip(*shared)
        beta_kw[:, list(ours)] += gamma * config.prior_strength * state.phi[:, list(theirs)]
    return beta_kw


@dataclass
class FitDiagnostics:
    initial_log_likelihood: float
    final_log_likelihood: float


def fit_version(
    docs: list[tuple[int, list[str]]],
    prev: list[TopicState],
    config: TopicModelConfig,
    version_index: int = 0,
    diagnostics: FitDiagnostics | None = None,
) -> TopicState:
    """Collapsed Gibbs LDA over one version's documents.

    docs: (review_id, stemmed tokens) pairs; tokens are filtered against the
    modeling vocabulary here.  Documents left empty by the filter keep a row
    in theta (uniform via the alpha prior) so document counts line up.
    Deterministic for a given config.seed.
    """
    if config.K < 2:
        raise ValueError("K must be >= 2")
    vocab = build_modeling_vocab([tokens for _, tokens in docs])
    if not docs or not vocab:
        raise EmptyCorpus(f"version {version_index}: nothing to model after stopword removal")
    if config.K > len(vocab):
        raise KTooLarge(f"K={config.K} exceeds {len(vocab)} distinct modelable tokens")
    word_index = {w: i for i, w in enumerate(vocab)}

    doc_of: list[int] = []
    word_of: list[int] = []
    for d, (_, tokens) in enumerate(docs):
        for tok in tokens:
            v = word_index.get(tok)
            if v is not None:
                doc_of.append(d)
                word_of.append(v)
    doc_of = np.asarray(doc_of, dtype=np.int64)
    word_of = np.asarray(word_of, dtype=np.int64)

    K, D, V = config.K, len(docs), len(vocab)
    alpha = config.alpha_value()
    beta_kw = _chained_prior(vocab, K, prev, config)
    beta_sum = beta_kw.sum(axis=1)

    rng = np.random.default_rng(config.seed)
    z = rng.integers(0, K, size=doc_of.shape[0], dtype=np.int64)
    n_dk = np.zeros((D, K), dtype=np.float64)
    n_kw = np.zeros((K, V), dtype=np.float64)
    n_k = np.zeros(K, dtype=np.float64)
    np.add.at(n_dk, (doc_of, z), 1.0)
    np.add.at(n_kw, (z, word_of), 1.0)
    np.add.at(n_k, z, 1.0)
    doc_lens = n_dk.sum(axis=1)

    if diagnostics is not None:
        diagnostics.initial_log_likelihood = _joint_log_likelihood(
            n_dk, n_kw, n_k, doc_lens, alpha, beta_kw, beta_sum
        )

    for _ in range(config.iterations):
        uniforms = rng.random(doc_of.shape[0])
        _gibbs_sweep(doc_of, word_of, z, n_dk, n_kw, n_k, alpha, beta_kw, beta_sum, uniforms)

    if diagnostics is not None:
        diagnostics.final_log_likelihood = _joint_log_likelihood(
            n_dk, n_kw, n_k, doc_lens, alpha, beta_kw, beta_sum
        )

    phi = (n_kw + beta_kw) / (n_k + beta_sum)[:, None]
    phi /= phi.sum(axis=1, keepdims=True)
    theta = (n_dk + alpha) / (doc_lens + K * alpha)[:, None]
    theta /= theta.sum(axis=1, keepdims=True)

    return TopicState(
        version_index=version_index,
        K=K,
        vocab=vocab,
        phi=phi,
        theta=theta,
        doc_review_ids=[rid for rid, _ in docs],
    )


def detect_emerging(
    current: TopicState, prev: list[TopicState], lam: float = 2.0, window: int | None = None
) -> set[int]:
    """Topic ids whose mean doc proportion jumped lambda sigmas above history.

    Needs at least two previous versions; statistics run over the last
    min(window, available) of them.
    """
    if len(prev) < 2:
        return set()
    w = len(prev) if window is None else min(window, len(prev))
    if w < 1:
        return set()
    history = np.stack([state.mean_theta() for state in prev[-w:]])
    mu = history.mean(axis=0)
    sigma = np.maximum(history.std(axis=0), SIGMA_FLOOR)
    m_now = current.mean_theta()
    return {k for k in range(current.K) if m_now[k] > mu[k] + lam * sigma[k]}


def _sentence_streams(corpus: list[CleanReview]) -> list[tuple[int, int, str, list[str]]]:
    """(review_id, sentence_index, surface, stemmed tokens) per sentence."""
    streams = []
    for review in corpus:
        per_sentence: dict[int, list[str]] = {}
        for tok, ref in zip(review.tokens, review.token_map):
            per_sentence.setdefault(ref.sentence_index, []).append(tok)
        for s_idx, sentence in enumerate(review.sentences):
            streams.append((review.review_id, s_idx, sentence, per_sentence.get(s_idx, [])))
    return streams


def label_topic(
    state: TopicState, corpus: list[CleanReview], k: int
) -> tuple[list[PhraseLabel], list[str]]:
    """Representative bigram labels and sentences for topic k.

    Bigrams are adjacent stems in the full token streams (stopwords kept);
    score = sqrt(phi_k(a1) * phi_k(a2)) * log(1 + count), count >= 2, words
    outside the modeling vocabulary contribute phi 0 and thus never label.
    Sentence score is the mean phi_k over the sentence's tokens (out-of-vocab
    tokens count 0), sentences of 3..30 tokens only.
    """
    row = state.phi[k]
    idx = state.word_index

    def phi_of(tok: str) -> float:
        v = idx.get(tok)
        return float(row[v]) if v is not None else 0.0

    bigram_counts: Counter[tuple[str, str]] = Counter()
    for review in corpus:
        toks = review.tokens
        for a, b in zip(toks, toks[1:]):
            bigram_counts[(a, b)] += 1

    scored = []
    for (a, b), count in bigram_counts.items():
        if count < MIN_BIGRAM_COUNT:
            continue
        score = math.sqrt(phi_of(a) * phi_of(b)) * math.log(1 + count)
        if score > 0.0:
            scored.append(PhraseLabel(text=f"{a} {b}", count=count, score=score))
    scored.sort(key=lambda p: (-p.score, p.text))
    phrases = scored[:MAX_PHRASE_LABELS]

    sentence_scores = []
    for review_id, s_idx, surface, toks in _sentence_streams(corpus):
        if not (MIN_SENTENCE_TOKENS <= len(toks) <= MAX_SENTENCE_TOKENS):
            continue
        score = sum(phi_of(t) for t in toks) / len(toks)
        sentence_scores.append((-score, review_id, s_idx, surface))
    sentence_scores.sort()
    sentences = [surface for _, _, _, surface in sentence_scores[:MAX_SENTENCES]]
    return phrases, sentences


def topic_sentiment(
    state: TopicState,
    k: int,
    scorer: SentimentScorer,
    opinion_vocab: set[str] | None = None,
) -> tuple[str, dict[str, tuple[float, str]], bool, list[str]]:
    """Modal sentiment label over the topic's scorable top-30 words.

    Ties break toward the more negative label (safer for triage).  Words
    outside the embedding vocabulary are skipped; if nothing is scorable the
    topic defaults to Slightly Negative with scorable=False.  opinion_vocab
    only annotates which top words were detected as opinion words.
    """
    word_sentiments: dict[str, tuple[float, str]] = {}
    opinion_words = []
    for word, _ in state.top_words(k):
        scored = scorer.try_score(word)
        if scored is not None:
            word_sentiments[word] = (scored.score, scored.label)
        if opinion_vocab and word in opinion_vocab:
            opinion_words.append(word)
    if not word_sentiments:
        return "Slightly Negative", {}, False, opinion_words

    counts = Counter(label for _, label in word_sentiments.values())
    modal = max(LABELS, key=lambda label: (counts.get(label, 0), LABELS.index(label)))
    return modal, word_sentiments, True, opinion_words


def summarize_topics(
    state: TopicState,
    corpus: list[CleanReview],
    emerging: set[int],
    scorer: SentimentScorer,
    opinion_vocab: set[str] | None = None,
) -> list[TopicSummary]:
    summaries = []
    for k in range(state.K):
        phrases, sentences = label_topic(state, corpus, k)
        label, word_sentiments, scorable, opinion_words = topic_sentiment(
            state, k, scorer, opinion_vocab
        )
        for phrase in phrases:
            # constituents may fall outside the top-30, so score them directly
            scores = [
                s.score for s in (scorer.try_score(w) for w in phrase.text.split()) if s
            ]
            mean = sum(scores) / len(scores) if scores else 0.0
            phrase.sentiment_score = min(1.0, max(-1.0, mean))
        summaries.append(
            TopicSummary(
                topic_id=k,
                top_words=state.top_words(k),
                phrase_labels=phrases,
                sentences=sentences,
                emerging=k in emerging,
                sentiment_label=label,
                word_sentiments=word_sentiments,
                scorable=scorable,
                opinion_words=opinion_words,
            )
        )
    return summaries
