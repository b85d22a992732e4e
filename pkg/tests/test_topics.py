import datetime
import math
import random

import numpy as np
import pytest

from fixtures import burst_token_docs
from reviewriver import topics
from reviewriver.embedding import EmbeddingModel
from reviewriver.errors import EmptyCorpus, KTooLarge
from reviewriver.ingest import RawReview
from reviewriver.sentiment import SeedLexicon, SentimentScorer
from reviewriver.textprep import preprocess_review
from reviewriver.topics import (
    FitDiagnostics,
    TopicModelConfig,
    TopicState,
    detect_emerging,
    fit_version,
    label_topic,
    topic_sentiment,
)

VOCAB_A = ["crash", "freez", "video", "load", "player", "buffer",
           "stream", "screen", "black", "stutter", "replai", "qualiti"]
VOCAB_B = ["login", "password", "account", "email", "verifi", "code",
           "reset", "signin", "token", "auth", "twofactor", "lockout"]


def two_cluster_docs(n_docs=200, doc_len=12, seed=0):
    rng = random.Random(seed)
    docs = []
    for i in range(n_docs):
        vocab = VOCAB_A if i % 2 == 0 else VOCAB_B
        docs.append((i + 1, [vocab[rng.randrange(len(vocab))] for _ in range(doc_len)]))
    return docs


def test_fit_normalization_invariants():
    state = fit_version(
        two_cluster_docs(), [], TopicModelConfig(K=2, iterations=60, seed=1)
    )
    np.testing.assert_allclose(state.phi.sum(axis=1), 1.0, atol=1e-9)
    np.testing.assert_allclose(state.theta.sum(axis=1), 1.0, atol=1e-9)
    assert (state.phi >= 0).all() and (state.theta >= 0).all()


def test_fit_determinism():
    config = TopicModelConfig(K=3, iterations=40, seed=9)
    a = fit_version(two_cluster_docs(), [], config)
    b = fit_version(two_cluster_docs(), [], config)
    np.testing.assert_array_equal(a.phi, b.phi)
    np.testing.assert_array_equal(a.theta, b.theta)


def test_two_cluster_purity():
    state = fit_version(
        two_cluster_docs(400), [], TopicModelConfig(K=2, iterations=150, seed=4)
    )
    for k in range(2):
        top10 = {w for w, _ in state.top_words(k, 10)}
        assert top10 <= set(VOCAB_A) or top10 <= set(VOCAB_B)


def test_kernel_python_twin_bit_identical():
    # the numba kernel and the pure-Python twin must walk the same chain
    docs = two_cluster_docs(40, doc_len=8, seed=2)
    config = TopicModelConfig(K=2, iterations=10, seed=3)
    vocab = topics.build_modeling_vocab([t for _, t in docs])
    widx = {w: i for i, w in enumerate(vocab)}
    doc_of, word_of = [], []
    for d, (_, toks) in enumerate(docs):
        for t in toks:
            if t in widx:
                doc_of.append(d)
                word_of.append(widx[t])
    doc_of = np.array(doc_of, dtype=np.int64)
    word_of = np.array(word_of, dtype=np.int64)

    def run(sweep):
        rng = np.random.default_rng(config.seed)
        z = rng.integers(0, config.K, size=doc_of.shape[0], dtype=np.int64)
        n_dk = np.zeros((len(docs), config.K))
        n_kw = np.zeros((config.K, len(vocab)))
        n_k = np.zeros(config.K)
        np.add.at(n_dk, (doc_of, z), 1.0)
        np.add.at(n_kw, (z, word_of), 1.0)
        np.add.at(n_k, z, 1.0)
        beta = np.full((config.K, len(vocab)), config.beta0)
        beta_sum = beta.sum(axis=1)
        for _ in range(config.iterations):
            uniforms = rng.random(doc_of.shape[0])
            sweep(doc_of, word_of, z, n_dk, n_kw, n_k,
                  config.alpha_value(), beta, beta_sum, uniforms)
        return z.copy()

    z_fast = run(topics._gibbs_sweep)
    z_py = run(topics._gibbs_sweep_py)
    np.testing.assert_array_equal(z_fast, z_py)


def test_first_version_uses_symmetric_prior():
    config = TopicModelConfig(K=2, iterations=5, seed=1)
    beta = topics._chained_prior(["a", "b", "c"], 2, [], config)
    np.testing.assert_array_equal(beta, np.full((2, 3), config.beta0))


def test_window_zero_matches_independent_lda():
    docs = two_cluster_docs(60, seed=6)
    config = TopicModelConfig(K=2, W=0, iterations=30, seed=8)
    prev = fit_version(docs, [], TopicModelConfig(K=2, iterations=30, seed=8))
    chained = fit_version(docs, [prev], config, version_index=1)
    independent = fit_version(docs, [], config, version_index=1)
    np.testing.assert_array_equal(chained.phi, independent.phi)


def test_chained_prior_weights_and_strength():
    config = TopicModelConfig(K=2, W=2, chain_decay=0.5, prior_strength=10.0, beta0=0.01)
    phi_old = np.array([[0.75, 0.25], [0.25, 0.75]])
    prev_state = TopicState(
        version_index=0, K=2, vocab=["a", "b"],
        phi=phi_old, theta=np.ones((1, 2)) / 2, doc_review_ids=[1],
    )
    beta = topics._chained_prior(["a", "b"], 2, [prev_state], config)
    gamma_1 = 0.5 / 0.5  # single history entry
    np.testing.assert_allclose(beta, 0.01 + gamma_1 * 10.0 * phi_old)

    older = TopicState(
        version_index=0, K=2, vocab=["a", "b"],
        phi=np.array([[0.5, 0.5], [0.5, 0.5]]),
        theta=np.ones((1, 2)) / 2, doc_review_ids=[1],
    )
    beta2 = topics._chained_prior(["a", "b"], 2, [older, prev_state], config)
    g1, g2 = 0.5 / 0.75, 0.25 / 0.75
    np.testing.assert_allclose(beta2, 0.01 + g1 * 10.0 * phi_old + g2 * 10.0 * older.phi)


def test_strong_prior_carries_top_words():
    docs = two_cluster_docs(150, seed=12)
    base = fit_version(docs, [], TopicModelConfig(K=2, iterations=80, seed=12))
    strong = TopicModelConfig(K=2, W=1, prior_strength=1000.0, iterations=80, seed=99)
    chained = fit_version(docs, [base], strong, version_index=1)
    for k in range(2):
        prev_top = {w for w, _ in base.top_words(k, 10)}
        curr_top = {w for w, _ in chained.top_words(k, 10)}
        assert len(prev_top & curr_top) >= 8


def test_likelihood_improves():
    diag = FitDiagnostics(0.0, 0.0)
    fit_version(
        two_cluster_docs(150, seed=3), [], TopicModelConfig(K=2, iterations=50, seed=5),
        diagnostics=diag,
    )
    assert diag.final_log_likelihood > diag.initial_log_likelihood


def test_empty_corpus_and_k_too_large():
    with pytest.raises(EmptyCorpus):
        fit_version([], [], TopicModelConfig(K=2, iterations=5, seed=1))
    with pytest.raises(EmptyCorpus):
        # every token below the min corpus frequency
        fit_version([(1, ["unique"]), (2, ["different"])], [],
                    TopicModelConfig(K=2, iterations=5, seed=1))
    with pytest.raises(KTooLarge):
        fit_version([(1, ["a", "a", "b", "b"])], [],
                    TopicModelConfig(K=5, iterations=5, seed=1))


# --- emerging detection -----------------------------------------------------


def _state_with_mean(means, version_index=0):
    K = len(means)
    theta = np.array([list(means)], dtype=float)
    theta = np.repeat(theta, 10, axis=0)
    return TopicState(
        version_index=version_index, K=K, vocab=["w"],
        phi=np.ones((K, 1)), theta=theta, doc_review_ids=list(range(10)),
    )


def test_emerging_hand_arithmetic():
    prev = [_state_with_mean([0.10, 0.90]), _state_with_mean([0.10, 0.90])]
    current = _state_with_mean([0.50, 0.50], version_index=2)
    flagged = detect_emerging(current, prev, lam=2.0)
    assert 0 in flagged  # 0.50 > 0.10 + 2 * 0.01 (sigma floored)
    assert 1 not in flagged  # 0.50 < 0.90


def test_emerging_equal_mean_not_flagged():
    prev = [_state_with_mean([0.3, 0.7]), _state_with_mean([0.3, 0.7])]
    assert detect_emerging(_state_with_mean([0.3, 0.7]), prev, lam=2.0) == set()


def test_emerging_needs_two_prev():
    prev = [_state_with_mean([0.1, 0.9])]
    assert detect_emerging(_state_with_mean([0.9, 0.1]), prev, lam=2.0) == set()


def test_emerging_window_zero():
    prev = [_state_with_mean([0.1, 0.9]), _state_with_mean([0.1, 0.9])]
    assert detect_emerging(_state_with_mean([0.9, 0.1]), prev, lam=2.0, window=0) == set()


def test_burst_fixture_flags_only_burst_version():
    for seed in (1, 2, 3):
        corpora = burst_token_docs(seed=seed)
        # short synthetic docs: the 50/K default alpha would drown the doc signal
        config = TopicModelConfig(K=4, W=3, alpha=0.5, iterations=80, seed=seed)
        states: list[TopicState] = []
        flags = []
        for t, docs in enumerate(corpora):
            state = fit_version(docs, states, config, version_index=t)
            flags.append(detect_emerging(state, states, lam=2.0, window=config.W))
            states.append(state)
        assert all(not f for f in flags[:-1])
        assert flags[-1]


# --- labeling ----------------------------------------------------------------


def _clean(text, review_id):
    return preprocess_review(
        RawReview(
            review_id=review_id, rating=1.0, text=text,
            post_date=datetime.date(2021, 1, 1), version="1.0", region="US",
        )
    )


def test_label_topic_top_bigram():
    # "fix crash" appears repeatedly and both stems dominate topic 0
    reviews = [
        _clean("fix crash now please", 1),
        _clean("fix crash again today", 2),
        _clean("fix crash fix crash", 3),
        _clean("menu design is tidy", 4),
        _clean("menu design looks tidy", 5),
    ]
    docs = [(r.review_id, r.tokens) for r in reviews]
    state = fit_version(docs, [], TopicModelConfig(K=2, iterations=80, seed=13))
    k = max(range(2), key=lambda kk: state.phi[kk][state.word_index["crash"]])
    phrases, sentences = label_topic(state, reviews, k)
    assert phrases and phrases[0].text == "fix crash"
    assert phrases[0].count >= 4
    expected = math.sqrt(
        state.phi[k][state.word_index["fix"]] * state.phi[k][state.word_index["crash"]]
    ) * math.log(1 + phrases[0].count)
    assert abs(phrases[0].score - expected) < 1e-12
    assert sentences and all(isinstance(s, str) for s in sentences)


def test_label_topic_uniform_ties_alphabetical():
    reviews = [
        _clean("beta alpha", 1), _clean("alpha beta", 2),
        _clean("beta alpha", 3), _clean("alpha beta", 4),
    ]
    docs = [(r.review_id, r.tokens) for r in reviews]
    state = fit_version(docs, [], TopicModelConfig(K=2, iterations=10, seed=3))
    state.phi = np.ones_like(state.phi) / state.phi.shape[1]
    phrases, _ = label_topic(state, reviews, 0)
    texts = [p.text for p in phrases]
    assert len(texts) == 2  # both bigrams have count 2, equal scores
    assert texts == sorted(texts)


def test_label_topic_no_repeated_bigrams():
    reviews = [_clean("alpha beta gamma delta", 1)]
    docs = [(r.review_id, r.tokens + ["alpha", "beta"]) for r in reviews]
    state = fit_version(docs, [], TopicModelConfig(K=2, iterations=10, seed=3))
    phrases, _ = label_topic(state, reviews, 0)
    assert phrases == []  # every bigram occurs once


def test_sentence_length_filter():
    long_text = " ".join(f"word{i}" for i in range(40))
    reviews = [_clean("crash crash crash crash", 1), _clean(long_text, 2), _clean("ok", 3)]
    docs = [(r.review_id, r.tokens) for r in reviews]
    state = fit_version(
        [(1, ["crash"] * 4), (2, ["crash", "video", "crash", "video"])], [],
        TopicModelConfig(K=2, iterations=10, seed=3),
    )
    _, sentences = label_topic(state, reviews, 0)
    assert all(3 <= len(s.split()) <= 40 for s in sentences)
    assert long_text not in sentences  # 40 tokens exceeds the cap
    assert "ok" not in sentences  # below the 3-token floor


# --- topic sentiment ---------------------------------------------------------


def _scorer_for(words_scores):
    """Model where each word's score is forced by placing it between seeds."""
    vocab = {"p": 0, "n": 1}
    rows = [[1.0, 0.0], [0.0, 1.0]]
    for word, score in words_scores.items():
        angle = (score + 1.0) / 2.0 * (np.pi / 2)  # -1 -> positive axis
        vocab[word] = len(rows)
        rows.append([np.cos(angle), np.sin(angle)])
    model = EmbeddingModel(dim=2, vocab=vocab, vectors=np.array(rows))
    lexicon = SeedLexicon(positives={"p": "base"}, negatives={"n": "base"})
    return SentimentScorer(model, lexicon)


def _uniform_state(words):
    V = len(words)
    return TopicState(
        version_index=0, K=1 + 1, vocab=sorted(words),
        phi=np.ones((2, V)) / V, theta=np.ones((1, 2)) / 2, doc_review_ids=[1],
    )


def test_topic_sentiment_unanimous():
    words = {f"w{i:02d}": 0.6 for i in range(30)}  # all Negative bin
    state = _uniform_state(list(words))
    label, sentiments, scorable, _ = topic_sentiment(state, 0, _scorer_for(words))
    assert scorable and label == "Negative"
    assert len(sentiments) == 30


def test_topic_sentiment_tie_breaks_negative():
    words = {f"a{i:02d}": -0.6 for i in range(15)}  # Positive bin
    words |= {f"b{i:02d}": 0.6 for i in range(15)}  # Negative bin
    state = _uniform_state(list(words))
    label, _, _, _ = topic_sentiment(state, 0, _scorer_for(words))
    assert label == "Negative"


def test_topic_sentiment_mode_by_count():
    words = {f"a{i:02d}": 0.30 for i in range(10)}  # Weakly Negative
    words |= {f"b{i:02d}": 0.10 for i in range(8)}  # Slightly Negative
    words |= {f"c{i:02d}": -0.60 for i in range(12)}  # Positive
    state = _uniform_state(list(words))
    label, _, _, _ = topic_sentiment(state, 0, _scorer_for(words))
    assert label == "Positive"


def test_topic_sentiment_nothing_scorable():
    state = _uniform_state(["x1", "x2", "x3"])
    label, sentiments, scorable, _ = topic_sentiment(state, 0, _scorer_for({}))
    assert (label, sentiments, scorable) == ("Slightly Negative", {}, False)


def test_topic_sentiment_opinion_annotation():
    words = {"crash": 0.6, "video": 0.6}
    state = _uniform_state(list(words))
    _, _, _, opinion_words = topic_sentiment(
        state, 0, _scorer_for(words), opinion_vocab={"crash"}
    )
    assert opinion_words == ["crash"]
