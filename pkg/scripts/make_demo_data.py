#!/usr/bin/env python3
"""Generate a synthetic multi-version review dataset plus its sidecar files.

Produces reviews.txt (dump format), parses.conllu (aligned dependency
parses), seeds.tsv and config.json under --out, sized for an end-to-end
demo run.  Version 4 carries an injected "overheating" issue so the
emerging-topic path has something to find.
"""

from __future__ import annotations

import argparse
import json
import random
from pathlib import Path

THEMES = {
    "playback": ["video", "player", "buffer", "stream", "screen", "quality", "audio"],
    "login": ["login", "password", "account", "email", "code", "reset", "signin"],
    "ads": ["ads", "banner", "popup", "premium", "subscription", "advert", "skip"],
    "ui": ["menu", "button", "layout", "design", "theme", "font", "navigation"],
}
BURST = ["overheating", "battery", "drain", "thermal", "spike", "shutdown"]
NEG_VERBS = ["crashes", "freezes", "fails", "lags", "breaks", "hangs"]
POS_VERBS = ["works", "loads", "shines", "helps", "improves", "delights"]
ADJS = ["slow", "broken", "great", "smooth", "awful", "nice"]
MONTHS = ["Jan", "Feb", "Mar", "Apr", "May", "Jun",
          "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"]


def build(versions: list[str], per_version: int, seed: int):
    rng = random.Random(seed)
    review_lines = []
    conllu_blocks = []
    line_no = 0
    for v_idx, version in enumerate(versions):
        burst_here = v_idx == len(versions) - 1
        n_docs = per_version + (per_version if burst_here else 0)
        for i in range(n_docs):
            line_no += 1
            if burst_here and i >= per_version:
                theme = BURST
                negative = True
            else:
                theme = THEMES[list(THEMES)[i % len(THEMES)]]
                negative = rng.random() < 0.5
            aspect = rng.choice(theme)
            verb = rng.choice(NEG_VERBS if negative else POS_VERBS)
            adjective = rng.choice(ADJS)
            extras = [rng.choice(theme) for _ in range(rng.randint(2, 5))]
            words = [aspect, verb, adjective, *extras]
            text = " ".join(words) + "."
            rating = float(rng.choice([1, 2] if negative else [4, 5]))
            date = f"{MONTHS[v_idx % 12]} {line_no % 27 + 1}, 2021"
            review_lines.append(
                f"{rating}******{text}******{date}******{version}******US"
            )
            rows = [f"# review_id = {line_no}"]
            for t_idx, word in enumerate(words, start=1):
                if t_idx == 1:
                    upos, head, deprel = "NOUN", 2, "nsubj"
                elif t_idx == 2:
                    upos, head, deprel = "VERB", 0, "root"
                elif t_idx == 3:
                    upos, head, deprel = "ADJ", 1, "amod"
                else:
                    upos, head, deprel = "NOUN", 2, "dep"
                rows.append(f"{t_idx}\t{word}\t{word}\t{upos}\t_\t_\t{head}\t{deprel}\t_\t_")
            conllu_blocks.append("\n".join(rows))
    return "\n".join(review_lines) + "\n", "\n\n".join(conllu_blocks) + "\n"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="demo-data", help="output directory")
    parser.add_argument("--versions", type=int, default=4)
    parser.add_argument("--per-version", type=int, default=120)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    versions = [f"1.{i}" for i in range(args.versions)]
    reviews_text, conllu_text = build(versions, args.per_version, args.seed)
    (out / "reviews.txt").write_text(reviews_text, encoding="utf-8")
    (out / "parses.conllu").write_text(conllu_text, encoding="utf-8")
    (out / "config.json").write_text(
        json.dumps(
            {
                "K": 5,
                "W": 3,
                "topic_alpha": 0.5,
                "topic_iterations": 200,
                "embedding_dim": 32,
                "embedding_epochs": 3,
                "review_threshold": 0.2,
                "seed": 7,
            },
            indent=2,
        ),
        encoding="utf-8",
    )
    n_lines = reviews_text.count("\n")
    print(f"wrote {n_lines} reviews across {len(versions)} versions to {out}/")
    print(f"next: python3 scripts/run_demo.py --data {out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
