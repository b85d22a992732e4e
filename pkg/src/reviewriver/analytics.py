"""Issue-river geometry, word clouds, review prioritization and search.

Branch width for topic k at version t sums ln(count) * Score_sen over the
topic's phrase labels.  Score_sen maps the label's mean word score S (larger
= more negative) into [0, 1]; the orientation switch decides which polarity
widens a branch:

    negative-wide (default): Score_sen = (S + 1) / 2  (concern widens)
    positive-wide:           Score_sen = (1 - S) / 2

A count-1 label contributes exactly 0 (ln 1 = 0).
"""

from __future__ import annotations

import datetime
import math
import re
from dataclasses import dataclass, field

from .errors import InvalidRange
from .ingest import RawReview
from .sentiment import NEUTRAL_LABEL
from .textprep import surface_to_stem
from .topics import TOP_WORDS, PhraseLabel, TopicState, TopicSummary

NEGATIVE_WIDE = "negative-wide"
POSITIVE_WIDE = "positive-wide"
ORIENTATIONS = (NEGATIVE_WIDE, POSITIVE_WIDE)

_WORD_CHUNK = re.compile(r"\S+")
_ALNUM = re.compile(r"[A-Za-z0-9]")


@dataclass
class RiverSlice:
    version_index: int
    widths: list[float]
    emerging: list[bool]


@dataclass
class WordCloudEntry:
    word: str
    weight: float
    label: str


@dataclass
class Highlight:
    start: int
    end: int
    word: str  # the stem that matched
    label: str


@dataclass
class PrioritizedReview:
    review: RawReview
    relevance: float
    highlights: list[Highlight] = field(default_factory=list)


@dataclass
class SearchQuery:
    text: str | None = None
    min_rating: float | None = None
    date_from: datetime.date | None = None
    date_to: datetime.date | None = None


def score_sen(sentiment_score: float, orientation: str = NEGATIVE_WIDE) -> float:
    if orientation not in ORIENTATIONS:
        raise ValueError(f"unknown river orientation {orientation!r}")
    if orientation == NEGATIVE_WIDE:
        return (sentiment_score + 1.0) / 2.0
    return (1.0 - sentiment_score) / 2.0


def river_width(labels: list[PhraseLabel], orientation: str = NEGATIVE_WIDE) -> float:
    width = 0.0
    for label in labels:
        width += math.log(label.count) * score_sen(label.sentiment_score, orientation)
    return max(0.0, width)


def build_river(
    summaries_per_version: list[list[TopicSummary]], orientation: str = NEGATIVE_WIDE
) -> list[RiverSlice]:
    slices = []
    for t, summaries in enumerate(summaries_per_version):
        slices.append(
            RiverSlice(
                version_index=t,
                widths=[river_width(s.phrase_labels, orientation) for s in summaries],
                emerging=[s.emerging for s in summaries],
            )
        )
    return slices


def word_cloud(summary: TopicSummary) -> list[WordCloudEntry]:
    """Top words with probability weight; unscorable words get the neutral marker."""
    entries = []
    for word, weight in summary.top_words[:TOP_WORDS]:
        sentiment = summary.word_sentiments.get(word)
        label = sentiment[1] if sentiment else NEUTRAL_LABEL
        entries.append(WordCloudEntry(word=word, weight=weight, label=label))
    return entries


def _find_highlights(text: str, summary: TopicSummary) -> list[Highlight]:
    top = {word for word, _ in summary.top_words}
    highlights = []
    for chunk in _WORD_CHUNK.finditer(text):
        stem = surface_to_stem(chunk.group())
        if stem is None or stem not in top:
            continue
        # trim the span to the alphanumeric core of the chunk
        inner = [m.start() for m in _ALNUM.finditer(chunk.group())]
        if not inner:
            continue
        start = chunk.start() + inner[0]
        end = chunk.start() + inner[-1] + 1
        sentiment = summary.word_sentiments.get(stem)
        label = sentiment[1] if sentiment else NEUTRAL_LABEL
        highlights.append(Highlight(start=start, end=end, word=stem, label=label))
    return highlights


def prioritize(
    state: TopicState,
    summary: TopicSummary,
    reviews_by_id: dict[int, RawReview],
    k: int,
    threshold: float,
) -> list[PrioritizedReview]:
    """Reviews with theta_d(k) >= threshold, most relevant first.

    Ties break by post date (newest first) then review id.  Topic words are
    highlighted in the original text, colored by their sentiment label.
    """
    if not (0.0 <= threshold <= 1.0):
        raise ValueError(f"threshold {threshold} outside [0, 1]")
    picked = []
    for d, review_id in enumerate(state.doc_review_ids):
        relevance = float(state.theta[d, k])
        if relevance < threshold:
            continue
        review = reviews_by_id[review_id]
        picked.append(
            PrioritizedReview(
                review=review,
                relevance=relevance,
                highlights=_find_highlights(review.text, summary),
            )
        )
    picked.sort(
        key=lambda p: (-p.relevance, -p.review.post_date.toordinal(), p.review.review_id)
    )
    return picked


def search(listing: list[PrioritizedReview], query: SearchQuery) -> list[PrioritizedReview]:
    """Conjunctive filter preserving order; text match is case-insensitive substring."""
    if query.date_from and query.date_to and query.date_from > query.date_to:
        raise InvalidRange(f"date range {query.date_from}..{query.date_to} is inverted")
    needle = query.text.lower() if query.text else None
    out = []
    for item in listing:
        review = item.review
        if needle is not None and needle not in review.text.lower():
            continue
        if query.min_rating is not None and review.rating < query.min_rating:
            continue
        if query.date_from is not None and review.post_date < query.date_from:
            continue
        if query.date_to is not None and review.post_date > query.date_to:
            continue
        out.append(item)
    return out
