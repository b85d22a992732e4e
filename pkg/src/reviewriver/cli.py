"""Batch CLI mirroring the HTTP API: validate, run, export, serve."""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .config import ProjectConfig
from .errors import ReviewMiningError, ValidationFailed
from .pipeline import PipelineInputs, run_pipeline, serialize_snapshot, validate_inputs


def _read(path: str | None) -> str | None:
    return Path(path).read_text(encoding="utf-8") if path else None


def _build_inputs(args: argparse.Namespace) -> PipelineInputs:
    config = ProjectConfig()
    if getattr(args, "config", None):
        config = ProjectConfig.from_json(Path(args.config).read_text(encoding="utf-8"))
    return PipelineInputs(
        reviews_text=Path(args.reviews).read_text(encoding="utf-8"),
        conllu_text=Path(args.conllu).read_text(encoding="utf-8"),
        seeds_text=_read(getattr(args, "seeds", None)),
        vectors_text=_read(getattr(args, "vectors", None)),
        config=config,
    )


def cmd_validate(args: argparse.Namespace) -> int:
    try:
        report = validate_inputs(_build_inputs(args))
    except ValidationFailed as exc:
        for problem in exc.report:
            print(f"INVALID: {problem}", file=sys.stderr)
        return 1
    print(f"reviews: {report['reviews']} parsed")
    for line in report["skipped"]:
        print(line)
    print(f"conllu: {report['conllu_sentences']} sentences")
    print("OK")
    return 0


def cmd_run(args: argparse.Namespace) -> int:
    try:
        result = run_pipeline(_build_inputs(args))
    except ReviewMiningError as exc:
        print(f"FAILED [{exc.code}]: {exc}", file=sys.stderr)
        return 1
    text = serialize_snapshot(result.document)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    if args.project_dir:
        project_dir = Path(args.project_dir)
        project_dir.mkdir(parents=True, exist_ok=True)
        (project_dir / "snapshot-latest.json").write_text(text, encoding="utf-8")
    for line in (s.report_line() for s in result.skipped):
        print(line)
    print(f"done: {len(result.corpora)} versions, snapshot -> {out}")
    return 0


def cmd_export(args: argparse.Namespace) -> int:
    source = Path(args.project_dir) / "snapshot-latest.json"
    if not source.exists():
        print(f"no snapshot in {args.project_dir}", file=sys.stderr)
        return 1
    Path(args.out).write_text(source.read_text(encoding="utf-8"), encoding="utf-8")
    print(f"exported -> {args.out}")
    return 0


def resolve_listen_addr(host: str, port: int, env_addr: str | None) -> tuple[str, int]:
    """REVIEWRIVER_ADDR=host:port (either part optional) overrides the flags."""
    if not env_addr:
        return host, port
    env_host, _, env_port = env_addr.partition(":")
    return env_host or host, int(env_port) if env_port else port


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .server import ProjectStore, create_app

    host, port = resolve_listen_addr(
        args.host, args.port, os.environ.get("REVIEWRIVER_ADDR")
    )
    app = create_app(ProjectStore(Path(args.data_dir)))
    uvicorn.run(app, host=host, port=port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reviewriver",
        description="Topic and sentiment analytics over versioned app reviews",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    validate = sub.add_parser("validate", help="parse all inputs and report problems")
    run = sub.add_parser("run", help="run the full pipeline and export a snapshot")
    for p in (validate, run):
        p.add_argument("--reviews", required=True, help="review dump file")
        p.add_argument("--conllu", required=True, help="dependency-parse sidecar")
        p.add_argument("--seeds", help="seed lexicon file (default: bundled)")
        p.add_argument("--vectors", help="pretrained vector file")
        p.add_argument("--config", help="config JSON file")
    run.add_argument("--out", required=True, help="snapshot output path")
    run.add_argument("--project-dir", help="also persist the snapshot here")
    validate.set_defaults(func=cmd_validate)
    run.set_defaults(func=cmd_run)

    export = sub.add_parser("export", help="copy a project's latest snapshot")
    export.add_argument("--project-dir", required=True)
    export.add_argument("--out", required=True)
    export.set_defaults(func=cmd_export)

    serve = sub.add_parser("serve", help="start the HTTP API")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8765)
    serve.add_argument("--data-dir", default="./reviewriver-projects")
    serve.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
