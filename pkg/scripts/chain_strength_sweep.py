#!/usr/bin/env python3
"""Sweep the chained-prior strength and measure topic continuity.

For each strength s, fit version 0 plain, then refit the SAME corpus as
version 1 with a W=1 chained prior and report the mean top-10 word overlap
between the matched topic indices. Overlap should rise toward 10/10 as s
grows; s=0 is the independent-LDA baseline.
"""

from __future__ import annotations

import argparse
import random

from reviewriver.topics import TopicModelConfig, fit_version

THEMES = [
    ["video", "player", "buffer", "stream", "screen", "quality", "audio",
     "resolution", "subtitle", "fullscreen", "cast", "playback"],
    ["login", "password", "account", "email", "code", "reset", "signin",
     "token", "auth", "profile", "verify", "lockout"],
    ["ads", "banner", "popup", "premium", "subscription", "advert", "skip",
     "trial", "billing", "refund", "upgrade", "price"],
]


def corpus(n_docs: int, rng: random.Random):
    docs = []
    for i in range(n_docs):
        theme = THEMES[i % len(THEMES)]
        docs.append((i + 1, [theme[rng.randrange(len(theme))] for _ in range(12)]))
    return docs


def mean_overlap(strength: float, seed: int, n_docs: int, iterations: int) -> float:
    docs = corpus(n_docs, random.Random(seed))
    base_cfg = TopicModelConfig(K=3, alpha=0.5, iterations=iterations, seed=seed)
    base = fit_version(docs, [], base_cfg, version_index=0)
    chained_cfg = TopicModelConfig(
        K=3, W=1, alpha=0.5, prior_strength=strength,
        iterations=iterations, seed=seed + 1,
    )
    refit = fit_version(docs, [base], chained_cfg, version_index=1)
    overlaps = []
    for k in range(3):
        prev_top = {w for w, _ in base.top_words(k, 10)}
        curr_top = {w for w, _ in refit.top_words(k, 10)}
        overlaps.append(len(prev_top & curr_top))
    return sum(overlaps) / len(overlaps)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--docs", type=int, default=240)
    parser.add_argument("--iterations", type=int, default=150)
    parser.add_argument("--seeds", type=int, default=5)
    parser.add_argument(
        "--strengths", type=float, nargs="+",
        default=[0.0, 1.0, 5.0, 10.0, 50.0, 200.0, 1000.0],
    )
    args = parser.parse_args()

    print(f"{'strength':>10}  {'mean top-10 overlap':>20}")
    for strength in args.strengths:
        values = [
            mean_overlap(strength, seed, args.docs, args.iterations)
            for seed in range(1, args.seeds + 1)
        ]
        mean = sum(values) / len(values)
        print(f"{strength:>10.1f}  {mean:>20.2f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
