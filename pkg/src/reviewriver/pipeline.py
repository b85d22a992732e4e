"""End-to-end run: ingest -> preprocess -> opinions -> embedding -> sentiment
-> per-version topics -> analytics -> snapshot document.

The exported snapshot is a single JSON document; given identical input bytes
and config the serialized bytes are identical (stable key order, repr-exact
floats, no timestamps).
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from importlib import resources

from . import analytics, embedding, ingest, opinions, sentiment, textprep, topics
from .config import ProjectConfig
from .errors import EmptyAfterCleaning, ValidationFailed


def base_seed_text() -> str:
    return resources.files("reviewriver.data").joinpath("base_seeds.tsv").read_text("utf-8")


@dataclass
class PipelineInputs:
    reviews_text: str
    conllu_text: str
    seeds_text: str | None = None  # None -> bundled base lexicon
    vectors_text: str | None = None
    config: ProjectConfig = field(default_factory=ProjectConfig)


@dataclass
class RunResult:
    """Rich in-memory result; `document` is the exported snapshot."""

    config: ProjectConfig
    corpora: list[ingest.VersionCorpus]
    skipped: list[ingest.SkippedLine]
    clean_by_id: dict[int, textprep.CleanReview]
    display_only_ids: list[int]
    states: list[topics.TopicState]
    summaries: list[list[topics.TopicSummary]]
    river: list[analytics.RiverSlice]
    scorer: sentiment.SentimentScorer
    opinion_vocab: set[str]
    document: dict

    def reviews_by_id(self) -> dict[int, ingest.RawReview]:
        return {r.review_id: r for corpus in self.corpora for r in corpus.reviews}


def validate_inputs(inputs: PipelineInputs) -> dict:
    """Parse every input; returns a report dict, raises ValidationFailed on hard errors."""
    problems: list[str] = []
    reviews, skipped = ingest.parse_review_file(inputs.reviews_text)
    if not reviews:
        problems.append("reviews: no parseable review lines")
    try:
        aligned = opinions.read_aligned_conllu(inputs.conllu_text)
        orphans = opinions.validate_alignment(aligned, {r.review_id for r in reviews})
        if orphans:
            problems.append(f"conllu: review ids not in review file: {orphans}")
    except Exception as exc:
        problems.append(f"conllu: {exc}")
        aligned = []
    if inputs.seeds_text is not None:
        try:
            sentiment.load_base_seeds(inputs.seeds_text)
        except Exception as exc:
            problems.append(f"seeds: {exc}")
    if inputs.vectors_text is not None:
        try:
            embedding.load_vectors_text(inputs.vectors_text)
        except Exception as exc:
            problems.append(f"vectors: {exc}")
    if problems:
        raise ValidationFailed(problems)
    return {
        "reviews": len(reviews),
        "skipped": [s.report_line() for s in skipped],
        "conllu_sentences": len(aligned),
    }


def run_pipeline(inputs: PipelineInputs) -> RunResult:
    config = inputs.config
    config.validate()

    # stage 1: ingest + preprocessing
    reviews, skipped = ingest.parse_review_file(inputs.reviews_text)
    corpora = ingest.group_by_version(reviews)
    clean_by_id: dict[int, textprep.CleanReview] = {}
    display_only: list[int] = []
    for review in reviews:
        try:
            clean_by_id[review.review_id] = textprep.preprocess_review(review)
        except EmptyAfterCleaning:
            display_only.append(review.review_id)

    # stage 2: opinion word detection
    aligned = opinions.read_aligned_conllu(inputs.conllu_text)
    pairs = opinions.extract_all_pairs(aligned)
    opinion_vocab = {p.opinion for p in pairs}

    # stage 3a: embeddings over the whole app corpus
    all_clean = [clean_by_id[r.review_id] for r in reviews if r.review_id in clean_by_id]
    init = None
    if inputs.vectors_text is not None:
        init = embedding.load_vectors_text(inputs.vectors_text)
    model = embedding.train_sgns(all_clean, init=init, config=config.sgns_config())

    # stage 3b: seed lexicon and scorer
    seeds_text = inputs.seeds_text if inputs.seeds_text is not None else base_seed_text()
    lexicon = sentiment.load_base_seeds(seeds_text)
    # one call per addition: later requests override earlier ones instead of
    # tripping the same-request conflict check
    for word, polarity in config.seed_additions:
        lexicon = sentiment.add_user_seeds(lexicon, [(word, polarity)])
    scorer = sentiment.SentimentScorer(model, lexicon)

    # stage 3c: version-sensitive topics
    topic_config = config.topic_config()
    states: list[topics.TopicState] = []
    summaries: list[list[topics.TopicSummary]] = []
    for corpus in corpora:
        docs = [
            (r.review_id, clean_by_id[r.review_id].tokens)
            for r in corpus.reviews
            if r.review_id in clean_by_id
        ]
        state = topics.fit_version(docs, states, topic_config, corpus.index_t)
        emerging = topics.detect_emerging(
            state, states, lam=config.emergence_lambda, window=config.W
        )
        corpus_clean = [clean_by_id[rid] for rid, _ in docs]
        summaries.append(
            topics.summarize_topics(state, corpus_clean, emerging, scorer, opinion_vocab)
        )
        states.append(state)

    # stage 4: analytics + export
    river = analytics.build_river(summaries, config.river_orientation)
    reviews_by_id = {r.review_id: r for r in reviews}
    document = build_snapshot_document(
        config, corpora, skipped, states, summaries, river, reviews_by_id
    )
    return RunResult(
        config=config,
        corpora=corpora,
        skipped=skipped,
        clean_by_id=clean_by_id,
        display_only_ids=display_only,
        states=states,
        summaries=summaries,
        river=river,
        scorer=scorer,
        opinion_vocab=opinion_vocab,
        document=document,
    )


def build_snapshot_document(
    config: ProjectConfig,
    corpora: list[ingest.VersionCorpus],
    skipped: list[ingest.SkippedLine],
    states: list[topics.TopicState],
    summaries: list[list[topics.TopicSummary]],
    river: list[analytics.RiverSlice],
    reviews_by_id: dict[int, ingest.RawReview],
) -> dict:
    versions = []
    for corpus, state, topic_summaries in zip(corpora, states, summaries):
        topics_doc = []
        for summary in topic_summaries:
            prioritized = analytics.prioritize(
                state, summary, reviews_by_id, summary.topic_id, config.review_threshold
            )
            topics_doc.append(
                {
                    "topic_id": summary.topic_id,
                    "top_words": [[w, p] for w, p in summary.top_words],
                    "phrase_labels": [
                        {
                            "text": p.text,
                            "count": p.count,
                            "score": p.score,
                            "sentiment_score": p.sentiment_score,
                        }
                        for p in summary.phrase_labels
                    ],
                    "sentences": summary.sentences,
                    "emerging": summary.emerging,
                    "sentiment_label": summary.sentiment_label,
                    "scorable": summary.scorable,
                    "word_sentiments": {
                        w: {"score": s, "label": l}
                        for w, (s, l) in summary.word_sentiments.items()
                    },
                    "opinion_words": summary.opinion_words,
                    "word_cloud": [
                        {"word": e.word, "weight": e.weight, "label": e.label}
                        for e in analytics.word_cloud(summary)
                    ],
                    "prioritized_ids": [p.review.review_id for p in prioritized],
                }
            )
        versions.append(
            {
                "version": corpus.version,
                "version_index": corpus.index_t,
                "review_count": len(corpus.reviews),
                "topics": topics_doc,
            }
        )
    return {
        "schema": "reviewriver-snapshot/1",
        "config": json.loads(config.to_json()),
        "skipped_lines": [s.report_line() for s in skipped],
        "review_count": len(reviews_by_id),
        "river": [
            {
                "version_index": s.version_index,
                "version": corpora[s.version_index].version,
                "widths": s.widths,
                "emerging": s.emerging,
            }
            for s in river
        ],
        "versions": versions,
    }


def serialize_snapshot(document: dict) -> str:
    return json.dumps(document, sort_keys=True, indent=2)


def snapshot_checksum(document: dict) -> str:
    return hashlib.sha256(serialize_snapshot(document).encode("utf-8")).hexdigest()
