#!/usr/bin/env python3
"""Run the full pipeline on a generated demo dataset and print a digest:
per-version river widths, emerging topics, top phrase labels and the most
relevant review per topic."""

from __future__ import annotations

import argparse
from pathlib import Path

from reviewriver.config import ProjectConfig
from reviewriver.pipeline import PipelineInputs, run_pipeline, serialize_snapshot


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--data", default="demo-data", help="directory from make_demo_data.py")
    parser.add_argument("--out", default=None, help="optional snapshot output path")
    args = parser.parse_args()

    data = Path(args.data)
    config = ProjectConfig.from_json((data / "config.json").read_text(encoding="utf-8"))
    result = run_pipeline(
        PipelineInputs(
            reviews_text=(data / "reviews.txt").read_text(encoding="utf-8"),
            conllu_text=(data / "parses.conllu").read_text(encoding="utf-8"),
            config=config,
        )
    )

    for corpus, slice_, summaries in zip(result.corpora, result.river, result.summaries):
        print(f"\n=== version {corpus.version} ({len(corpus.reviews)} reviews) ===")
        for summary, width in zip(summaries, slice_.widths):
            flag = "  EMERGING" if summary.emerging else ""
            labels = ", ".join(p.text for p in summary.phrase_labels) or "-"
            print(
                f"  topic {summary.topic_id}: width={width:7.3f} "
                f"[{summary.sentiment_label}]{flag}  labels: {labels}"
            )

    if args.out:
        Path(args.out).write_text(serialize_snapshot(result.document), encoding="utf-8")
        print(f"\nsnapshot -> {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
