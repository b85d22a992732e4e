"""Opinion-word sentiment from seed-lexicon cosine similarities.

A word's score is its mean cosine similarity to the negative seed set minus
its mean similarity to the positive seed set, so LARGER scores mean MORE
NEGATIVE opinions.  The raw difference lives in [-2, 2]; it is clamped to
[-1, 1] (the documented range) and the raw value is kept for diagnostics.

Scores map onto eight equal-width, left-closed bins from Strongly Positive
at -1 up to Strongly Negative at +1 (the last bin is closed).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import porter
from .embedding import EmbeddingModel, cosine
from .errors import (
    ConflictWithinRequest,
    LexiconFormatError,
    NoUsableSeeds,
    OutOfVocab,
)

LABELS = (
    "Strongly Positive",
    "Positive",
    "Weakly Positive",
    "Slightly Positive",
    "Slightly Negative",
    "Weakly Negative",
    "Negative",
    "Strongly Negative",
)
NEUTRAL_LABEL = "Neutral"  # for display of unscorable words; not part of the scale

BASE, USER = "base", "user"


@dataclass
class SeedLexicon:
    """Positive/negative seed stems with per-stem provenance (base or user)."""

    positives: dict[str, str] = field(default_factory=dict)
    negatives: dict[str, str] = field(default_factory=dict)
    dropped: list[str] = field(default_factory=list)

    def copy(self) -> "SeedLexicon":
        return SeedLexicon(dict(self.positives), dict(self.negatives), list(self.dropped))


def load_base_seeds(text: str) -> SeedLexicon:
    """Parse `word<TAB>polarity` rows; neutral rows ignored, stems deduplicated.

    A stem claimed by both polarities is dropped from both and reported via
    lexicon.dropped.  An empty lexicon loads fine and fails only at scoring.
    """
    positives: dict[str, str] = {}
    negatives: dict[str, str] = {}
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise LexiconFormatError(line_no, f"expected word<TAB>polarity, got {line!r}")
        word, polarity = parts[0].strip(), parts[1].strip().lower()
        if polarity == "neutral":
            continue
        if polarity not in ("positive", "negative"):
            raise LexiconFormatError(line_no, f"unknown polarity {polarity!r}")
        stemmed = porter.stem(word.lower())
        (positives if polarity == "positive" else negatives)[stemmed] = BASE
    both = sorted(set(positives) & set(negatives))
    for stem in both:
        del positives[stem]
        del negatives[stem]
    return SeedLexicon(positives, negatives, both)


def add_user_seeds(lexicon: SeedLexicon, words: list[tuple[str, str]]) -> SeedLexicon:
    """Merged lexicon with user entries; user polarity overrides base on conflict."""
    additions: dict[str, str] = {}
    for word, polarity in words:
        polarity = polarity.lower()
        if polarity not in ("positive", "negative"):
            raise LexiconFormatError(0, f"unknown polarity {polarity!r}")
        stemmed = porter.stem(word.lower())
        if stemmed in additions and additions[stemmed] != polarity:
            raise ConflictWithinRequest(f"{word!r} requested as both polarities")
        additions[stemmed] = polarity
    merged = lexicon.copy()
    for stem, polarity in additions.items():
        if polarity == "positive":
            merged.negatives.pop(stem, None)
            merged.positives[stem] = USER
        else:
            merged.positives.pop(stem, None)
            merged.negatives[stem] = USER
    return merged


@dataclass(frozen=True)
class SentimentScore:
    word: str
    score: float  # clamped to [-1, 1]
    label: str
    raw: float  # unclamped diagnostic value in [-2, 2]


def label_of(score: float) -> str:
    """Bin a score in [-1, 1] into the 8-level scale (left-closed bins)."""
    idx = int(math.floor((score + 1.0) / 0.25))
    return LABELS[min(max(idx, 0), 7)]


def more_negative(a: str, b: str) -> str:
    return a if LABELS.index(a) >= LABELS.index(b) else b


class SentimentScorer:
    """Read-only scorer over an immutable (model, lexicon) snapshot.

    Seeds absent from the model vocabulary (or with a zero vector) are
    skipped; at least one usable seed per polarity is required to score.
    """

    def __init__(self, model: EmbeddingModel, lexicon: SeedLexicon):
        self.model = model
        self.lexicon = lexicon
        self.usable_positives = self._usable(lexicon.positives)
        self.usable_negatives = self._usable(lexicon.negatives)

    def _usable(self, seeds: dict[str, str]) -> list[str]:
        usable = []
        for stem in sorted(seeds):
            idx = self.model.vocab.get(stem)
            if idx is not None and float((self.model.vectors[idx] ** 2).sum()) > 0.0:
                usable.append(stem)
        return usable

    def score_word(self, word: str) -> SentimentScore:
        if word not in self.model.vocab:
            raise OutOfVocab(word)
        if not self.usable_positives:
            raise NoUsableSeeds("positive")
        if not self.usable_negatives:
            raise NoUsableSeeds("negative")
        neg = sum(cosine(self.model, word, n) for n in self.usable_negatives)
        pos = sum(cosine(self.model, word, p) for p in self.usable_positives)
        raw = neg / len(self.usable_negatives) - pos / len(self.usable_positives)
        score = min(1.0, max(-1.0, raw))
        return SentimentScore(word=word, score=score, label=label_of(score), raw=raw)

    def try_score(self, word: str) -> SentimentScore | None:
        """score_word, or None when the word is out of vocabulary."""
        try:
            return self.score_word(word)
        except OutOfVocab:
            return None
