"""Review text cleaning, tokenization and stemming.

Cleaning keeps ASCII letters, digits, whitespace and the punctuation set
. , ! ? ' ; : and collapses runs of three or more identical letters
("suuuuper" -> "super").  Tokens are lowercased, length-capped at 15, and
consecutive duplicates are collapsed ("very very annoying" -> "very
annoying").  Original sentences are preserved for display.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import porter
from .errors import EmptyAfterCleaning
from .ingest import RawReview

KEPT_PUNCTUATION = ".,!?';:"
MAX_TOKEN_LEN = 15

_LETTER_RUN = re.compile(r"([A-Za-z])\1{2,}")
_SENTENCE_SPLIT = re.compile(r"[.!?]+")
_TOKEN_SPLIT = re.compile(r"[^a-z0-9]+")
_SURFACE_WORD = re.compile(r"\S+")


@dataclass(frozen=True)
class TokenRef:
    """Where a stemmed token came from: sentence index + surface chunk."""

    sentence_index: int
    surface: str


@dataclass
class CleanReview:
    review_id: int
    sentences: list[str]
    tokens: list[str]
    token_map: list[TokenRef]


def clean_text(text: str) -> str:
    kept = []
    for ch in text:
        if ch.isascii() and (ch.isalnum() or ch.isspace() or ch in KEPT_PUNCTUATION):
            kept.append(ch)
    return _LETTER_RUN.sub(r"\1", "".join(kept))


def split_sentences(text: str) -> list[str]:
    """Split on . ! ? and trim; informal reviews, no abbreviation handling."""
    return [s.strip() for s in _SENTENCE_SPLIT.split(text) if s.strip()]


def _collapse_consecutive(tokens: list[str]) -> list[str]:
    out: list[str] = []
    for tok in tokens:
        if not out or out[-1] != tok:
            out.append(tok)
    return out


def tokenize_and_normalize(text: str) -> list[str]:
    """Lowercase, split on whitespace/punctuation, length-cap, dedupe runs.

    Over-long tokens are dropped before the duplicate collapse so the result
    is idempotent (re-tokenizing the joined output is a fixed point).
    """
    tokens = [t for t in _TOKEN_SPLIT.split(text.lower()) if t]
    tokens = [t for t in tokens if len(t) <= MAX_TOKEN_LEN]
    return _collapse_consecutive(tokens)


def stem_tokens(tokens: list[str]) -> list[str]:
    return [porter.stem(t) for t in tokens]


def preprocess_review(review: RawReview) -> CleanReview:
    """Full pipeline for one review; raises EmptyAfterCleaning if no tokens survive.

    Token stream equals porter.stem over tokenize_and_normalize(clean_text(text)),
    with one extra consecutive-duplicate collapse after stemming (stems can make
    distinct neighbors identical, and the clean-token invariant forbids that).
    """
    sentences = split_sentences(review.text)
    candidates: list[tuple[str, TokenRef]] = []
    for s_idx, sentence in enumerate(sentences):
        for match in _SURFACE_WORD.finditer(sentence):
            surface = match.group()
            for tok in _TOKEN_SPLIT.split(clean_text(surface).lower()):
                if tok and len(tok) <= MAX_TOKEN_LEN:
                    candidates.append((tok, TokenRef(s_idx, surface)))

    tokens: list[str] = []
    refs: list[TokenRef] = []
    for tok, ref in candidates:
        if tokens and tokens[-1] == tok:
            continue
        tokens.append(tok)
        refs.append(ref)

    stemmed: list[str] = []
    final_refs: list[TokenRef] = []
    for tok, ref in zip(stem_tokens(tokens), refs):
        if stemmed and stemmed[-1] == tok:
            continue
        stemmed.append(tok)
        final_refs.append(ref)

    if not stemmed:
        raise EmptyAfterCleaning(f"review {review.review_id} has no usable tokens")
    return CleanReview(
        review_id=review.review_id,
        sentences=sentences,
        tokens=stemmed,
        token_map=final_refs,
    )


def surface_to_stem(surface: str) -> str | None:
    """Stem of a single surface word after cleaning, or None if it dissolves.

    Used for highlight matching: a surface word maps to a highlightable stem
    only if cleaning leaves exactly one token of acceptable length.
    """
    parts = [t for t in _TOKEN_SPLIT.split(clean_text(surface).lower()) if t]
    if len(parts) != 1 or len(parts[0]) > MAX_TOKEN_LEN:
        return None
    return porter.stem(parts[0])
