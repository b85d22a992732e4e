"""Deterministic synthetic app-review fixtures shared across the test suite."""

from __future__ import annotations

import random


def conllu_row(i, form, lemma, upos, head, deprel):
    return f"{i}\t{form}\t{lemma}\t{upos}\t_\t_\t{head}\t{deprel}\t_\t_"


# hand-written parses for the canonical aspect-opinion constructions
APP_CRASHED = "\n".join(
    [
        conllu_row(1, "This", "this", "DET", 2, "det"),
        conllu_row(2, "app", "app", "NOUN", 3, "nsubj"),
        conllu_row(3, "crashed", "crash", "VERB", 0, "root"),
        conllu_row(4, "on", "on", "ADP", 5, "case"),
        conllu_row(5, "launch", "launch", "NOUN", 3, "obl"),
        conllu_row(6, ".", ".", "PUNCT", 3, "punct"),
    ]
)

DISLIKE_APP = "\n".join(
    [
        conllu_row(1, "I", "I", "PRON", 2, "nsubj"),
        conllu_row(2, "dislike", "dislike", "VERB", 0, "root"),
        conllu_row(3, "the", "the", "DET", 4, "det"),
        conllu_row(4, "app", "app", "NOUN", 2, "obj"),
        conllu_row(5, ".", ".", "PUNCT", 2, "punct"),
    ]
)

CHEAPEST_FLIGHT = "\n".join(
    [
        conllu_row(1, "Book", "book", "VERB", 0, "root"),
        conllu_row(2, "the", "the", "DET", 4, "det"),
        conllu_row(3, "cheapest", "cheapest", "ADJ", 4, "amod"),
        conllu_row(4, "flight", "flight", "NOUN", 1, "obj"),
        conllu_row(5, ".", ".", "PUNCT", 1, "punct"),
    ]
)

SLOW_GLITCHES = "\n".join(
    [
        conllu_row(1, "it", "it", "PRON", 4, "nsubj"),
        conllu_row(2, "is", "be", "AUX", 4, "cop"),
        conllu_row(3, "so", "so", "ADV", 4, "advmod"),
        conllu_row(4, "slow", "slow", "ADJ", 0, "root"),
        conllu_row(5, "and", "and", "CCONJ", 7, "cc"),
        conllu_row(6, "it", "it", "PRON", 7, "nsubj"),
        conllu_row(7, "glitches", "glitch", "VERB", 4, "conj"),
        conllu_row(8, "up", "up", "ADP", 7, "compound:prt"),
    ]
)

THEMES = {
    "playback": ["video", "player", "buffer", "stream", "screen", "quality", "audio"],
    "login": ["login", "password", "account", "email", "code", "reset", "signin"],
    "ads": ["ads", "banner", "popup", "premium", "subscription", "advert", "skip"],
    "ui": ["menu", "button", "layout", "design", "theme", "font", "navigation"],
}
NEGATIVE_WORDS = ["crashes", "freezes", "fails", "lags", "breaks", "hangs"]
POSITIVE_WORDS = ["works", "loads", "shines", "helps", "improves", "delights"]
ADJECTIVES = ["slow", "broken", "great", "smooth", "awful", "nice"]

_MONTHS = ["Jan", "Feb", "Mar", "Apr", "May", "Jun", "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"]


def _date_str(day_index: int, month_index: int, year: int = 2021) -> str:
    month = _MONTHS[month_index % 12]
    return f"{month} {day_index % 27 + 1}, {year + month_index // 12}"


def make_fixture(
    versions: list[str],
    reviews_per_version: int = 30,
    seed: int = 1234,
    themes: list[str] | None = None,
) -> tuple[str, str]:
    """(reviews file text, aligned conllu text) for a synthetic app timeline.

    Each review is one sentence "<aspect> <verb> <adjective> <theme words>",
    parsed in the sidecar so that nsubj and amod pairs come out.
    """
    rng = random.Random(seed)
    theme_names = themes or list(THEMES)
    review_lines: list[str] = []
    conllu_blocks: list[str] = []
    line_no = 0
    for v_idx, version in enumerate(versions):
        for _ in range(reviews_per_version):
            line_no += 1
            theme = THEMES[theme_names[rng.randrange(len(theme_names))]]
            aspect = theme[rng.randrange(len(theme))]
            negative = rng.random() < 0.5
            verb = (NEGATIVE_WORDS if negative else POSITIVE_WORDS)[rng.randrange(6)]
            adjective = ADJECTIVES[rng.randrange(len(ADJECTIVES))]
            extra = [theme[rng.randrange(len(theme))] for _ in range(rng.randrange(2, 5))]
            words = [aspect, verb, adjective, *extra]
            text = " ".join(words) + "."
            rating = float(rng.choice([1, 2] if negative else [4, 5]))
            review_lines.append(
                f"{rating}******{text}******{_date_str(line_no, v_idx)}"
                f"******{version}******US"
            )
            rows = [f"# review_id = {line_no}"]
            for i, word in enumerate(words, start=1):
                if i == 1:
                    upos, head, deprel = "NOUN", 2, "nsubj"
                elif i == 2:
                    upos, head, deprel = "VERB", 0, "root"
                elif i == 3:
                    upos, head, deprel = "ADJ", 1, "amod"
                else:
                    upos, head, deprel = "NOUN", 2, "dep"
                rows.append(
                    f"{i}\t{word}\t{word}\t{upos}\t_\t_\t{head}\t{deprel}\t_\t_"
                )
            conllu_blocks.append("\n".join(rows))
    return "\n".join(review_lines) + "\n", "\n\n".join(conllu_blocks) + "\n"


def two_version_fixture(seed: int = 99) -> tuple[str, str]:
    """Small deterministic two-version dataset used by the oracle checks."""
    return make_fixture(["1.0", "2.0"], reviews_per_version=40, seed=seed)


def burst_token_docs(
    n_versions: int = 4,
    docs_per_version: int = 120,
    burst_docs: int = 200,
    seed: int = 5,
) -> list[list[tuple[int, list[str]]]]:
    """Token-level corpora: quiet versions from stable themes, then a burst of
    an unseen vocabulary injected into the last version."""
    rng = random.Random(seed)
    quiet_themes = [THEMES[name] for name in ("playback", "login", "ads", "ui")]
    burst_vocab = ["overheat", "battery", "drain", "thermal", "spike", "meltdown",
                   "scorch", "wattage", "degrade", "shutdown"]
    out = []
    review_id = 0
    for v in range(n_versions):
        docs = []
        for i in range(docs_per_version):
            review_id += 1
            # round-robin theme assignment keeps quiet versions' composition
            # identical, so only the injected burst moves the topic shares
            theme = quiet_themes[i % len(quiet_themes)]
            docs.append(
                (review_id, [theme[rng.randrange(len(theme))] for _ in range(10)])
            )
        if v == n_versions - 1:
            for _ in range(burst_docs):
                review_id += 1
                docs.append(
                    (review_id, [burst_vocab[rng.randrange(len(burst_vocab))] for _ in range(10)])
                )
        out.append(docs)
    return out
