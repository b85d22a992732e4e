"""Project lifecycle and the HTTP+JSON API the UI consumes.

A project is a directory of uploaded files plus exported snapshot documents;
run status and the rich result live in memory.  One pipeline worker per
project; queries read immutable snapshots, so a run in progress never tears
a response (readers see the previous complete snapshot until the atomic
swap).  Paths and field names are pinned in docs/api.md.
"""

from __future__ import annotations

import datetime
import threading
import uuid
from dataclasses import asdict, dataclass, field
from pathlib import Path

from fastapi import FastAPI, Query, Request
from fastapi.responses import JSONResponse

from . import analytics, ingest, opinions, sentiment
from .config import ProjectConfig
from .embedding import load_vectors_text
from .errors import (
    AlreadyRunning,
    ConfigError,
    InvalidRange,
    NotFound,
    NotReady,
    ReviewMiningError,
    ValidationFailed,
)
from .pipeline import (
    PipelineInputs,
    RunResult,
    run_pipeline,
    serialize_snapshot,
    snapshot_checksum,
)

FILE_KINDS = ("reviews", "conllu", "vectors", "seeds")

IDLE, RUNNING, DONE, FAILED = "idle", "running", "done", "failed"


@dataclass
class Snapshot:
    version: int
    result: RunResult
    checksum: str


@dataclass
class Project:
    project_id: str
    directory: Path
    name: str = ""
    config: ProjectConfig = field(default_factory=ProjectConfig)
    files: dict[str, str] = field(default_factory=dict)
    status: str = IDLE
    failure_reason: str | None = None
    stale: bool = False
    snapshot: Snapshot | None = None
    snapshot_counter: int = 0
    run_lock: threading.Lock = field(default_factory=threading.Lock)
    state_lock: threading.RLock = field(default_factory=threading.RLock)

    def status_doc(self) -> dict:
        with self.state_lock:
            return {
                "project_id": self.project_id,
                "name": self.name,
                "status": self.status,
                "failure_reason": self.failure_reason,
                "files": sorted(self.files),
                "snapshot": self.snapshot.version if self.snapshot else None,
                "stale": self.stale,
                "config": asdict(self.config),
            }


class ProjectStore:
    def __init__(self, root: Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._projects: dict[str, Project] = {}
        self._lock = threading.Lock()

    def create(self, name: str = "") -> Project:
        project_id = uuid.uuid4().hex[:12]
        directory = self.root / project_id
        directory.mkdir(parents=True, exist_ok=True)
        project = Project(project_id=project_id, directory=directory, name=name)
        with self._lock:
            self._projects[project_id] = project
        return project

    def get(self, project_id: str) -> Project:
        with self._lock:
            project = self._projects.get(project_id)
        if project is None:
            raise NotFound(f"no such project {project_id!r}")
        return project

    def list_ids(self) -> list[str]:
        with self._lock:
            return sorted(self._projects)


def _validate_upload(project: Project, kind: str, text: str) -> dict:
    """Parser of the owning module vets the bytes before acceptance."""
    if kind == "reviews":
        reviews, skipped = ingest.parse_review_file(text)
        if not reviews:
            raise ValidationFailed(["no parseable review lines"])
        return {
            "lines": len(reviews) + len(skipped),
            "accepted": len(reviews),
            "skip_report": [s.report_line() for s in skipped],
        }
    if kind == "conllu":
        aligned = opinions.read_aligned_conllu(text)
        report: dict = {"sentences": len(aligned)}
        reviews_text = project.files.get("reviews")
        if reviews_text is not None:
            reviews, _ = ingest.parse_review_file(reviews_text)
            orphans = opinions.validate_alignment(aligned, {r.review_id for r in reviews})
            if orphans:
                raise ValidationFailed([f"orphan review ids: {orphans}"])
        return report
    if kind == "vectors":
        vectors = load_vectors_text(text)
        return {"tokens": len(vectors)}
    if kind == "seeds":
        lexicon = sentiment.load_base_seeds(text)
        return {
            "positives": len(lexicon.positives),
            "negatives": len(lexicon.negatives),
            "dropped": lexicon.dropped,
        }
    raise NotFound(f"unknown file kind {kind!r}; expected one of {FILE_KINDS}")


def _run_project(project: Project) -> None:
    try:
        inputs = PipelineInputs(
            reviews_text=project.files["reviews"],
            conllu_text=project.files["conllu"],
            seeds_text=project.files.get("seeds"),
            vectors_text=project.files.get("vectors"),
            config=project.config,
        )
        result = run_pipeline(inputs)
        document_text = serialize_snapshot(result.document)
        with project.state_lock:
            project.snapshot_counter += 1
            project.snapshot = Snapshot(
                version=project.snapshot_counter,
                result=result,
                checksum=snapshot_checksum(result.document),
            )
            project.status = DONE
            project.failure_reason = None
            project.stale = False
        out = project.directory / f"snapshot-{project.snapshot_counter}.json"
        out.write_text(document_text, encoding="utf-8")
        (project.directory / "snapshot-latest.json").write_text(
            document_text, encoding="utf-8"
        )
    except ReviewMiningError as exc:
        with project.state_lock:
            project.status = FAILED
            project.failure_reason = f"{exc.code}: {exc}"
    except Exception as exc:  # surfaced, never swallowed silently
        with project.state_lock:
            project.status = FAILED
            project.failure_reason = f"INTERNAL: {exc}"
    finally:
        project.run_lock.release()


def start_run(project: Project, synchronous: bool = False) -> None:
    for kind in ("reviews", "conllu"):
        if kind not in project.files:
            raise ValidationFailed([f"missing {kind} file"])
    if not project.run_lock.acquire(blocking=False):
        raise AlreadyRunning(f"project {project.project_id} already has a run in progress")
    with project.state_lock:
        project.status = RUNNING
    if synchronous:
        _run_project(project)
    else:
        threading.Thread(target=_run_project, args=(project,), daemon=True).start()


def _current_snapshot(project: Project) -> Snapshot:
    snapshot = project.snapshot  # atomic ref read; never mutated in place
    if snapshot is None:
        raise NotReady(f"project {project.project_id} has no completed run")
    return snapshot


def _parse_date(raw: str | None, name: str) -> datetime.date | None:
    if raw is None:
        return None
    try:
        return datetime.date.fromisoformat(raw)
    except ValueError:
        raise InvalidRange(f"{name} must be an ISO date, got {raw!r}") from None


def create_app(store: ProjectStore) -> FastAPI:
    app = FastAPI(title="reviewriver", docs_url=None, redoc_url=None)

    @app.exception_handler(ReviewMiningError)
    async def _domain_error(_request: Request, exc: ReviewMiningError):
        status = {
            "NOT_FOUND": 404,
            "NOT_READY": 409,
            "ALREADY_RUNNING": 409,
            "VALIDATION_FAILED": 422,
            "INVALID_CONFIG": 422,
            "INVALID_RANGE": 422,
            "SEED_CONFLICT": 422,
        }.get(exc.code, 400)
        body = {"error": {"code": exc.code, "message": str(exc)}}
        if isinstance(exc, ValidationFailed):
            body["error"]["report"] = exc.report
        return JSONResponse(status_code=status, content=body)

    @app.post("/projects")
    async def create_project(payload: dict | None = None):
        project = store.create(name=(payload or {}).get("name", ""))
        return {"project_id": project.project_id}

    @app.get("/projects")
    async def list_projects():
        return {"projects": store.list_ids()}

    @app.get("/projects/{project_id}")
    async def project_status(project_id: str):
        return store.get(project_id).status_doc()

    @app.post("/projects/{project_id}/files/{kind}")
    async def upload_file(project_id: str, kind: str, request: Request):
        project = store.get(project_id)
        raw = await request.body()
        try:
            text = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ValidationFailed([f"not valid UTF-8: {exc}"]) from None
        report = _validate_upload(project, kind, text)
        with project.state_lock:
            project.files[kind] = text
            project.stale = project.snapshot is not None
        (project.directory / f"{kind}.txt").write_text(text, encoding="utf-8")
        return {"accepted": True, "kind": kind, "report": report}

    @app.put("/projects/{project_id}/config")
    async def put_config(project_id: str, payload: dict):
        project = store.get(project_id)
        config = ProjectConfig.from_dict(payload)
        with project.state_lock:
            project.config = config
            project.stale = project.snapshot is not None
        (project.directory / "config.json").write_text(config.to_json(), encoding="utf-8")
        return {"accepted": True, "stale": project.stale}

    @app.put("/projects/{project_id}/seeds")
    async def put_seeds(project_id: str, payload: dict):
        project = store.get(project_id)
        additions = payload.get("additions", [])
        if not all(
            isinstance(a, (list, tuple)) and len(a) == 2 and all(isinstance(x, str) for x in a)
            for a in additions
        ):
            raise ValidationFailed(["additions must be [word, polarity] string pairs"])
        # same-request conflicts are rejected before anything is stored
        sentiment.add_user_seeds(sentiment.SeedLexicon(), [tuple(a) for a in additions])
        with project.state_lock:
            merged = [list(a) for a in additions]
            project.config.seed_additions = project.config.seed_additions + merged
            project.config.validate()
            project.stale = project.snapshot is not None
        return {"accepted": True, "stale": project.stale}

    @app.post("/projects/{project_id}/run")
    async def run_project(project_id: str, wait: bool = False):
        project = store.get(project_id)
        start_run(project, synchronous=wait)
        return {"status": project.status}

    @app.get("/projects/{project_id}/river")
    async def get_river(project_id: str):
        project = store.get(project_id)
        snapshot = _current_snapshot(project)
        return {
            "snapshot": snapshot.version,
            "checksum": snapshot.checksum,
            "stale": project.stale,
            "river": snapshot.result.document["river"],
        }

    @app.get("/projects/{project_id}/topics/{version_index}/{topic_id}")
    async def get_topic(project_id: str, version_index: int, topic_id: int):
        project = store.get(project_id)
        snapshot = _current_snapshot(project)
        doc = snapshot.result.document
        if not (0 <= version_index < len(doc["versions"])):
            raise NotFound(f"no version index {version_index}")
        version_doc = doc["versions"][version_index]
        if not (0 <= topic_id < len(version_doc["topics"])):
            raise NotFound(f"no topic {topic_id}")
        topic_doc = dict(version_doc["topics"][topic_id])
        topic_doc["highlight_sentences"] = topic_doc["emerging"]
        return {
            "snapshot": snapshot.version,
            "checksum": snapshot.checksum,
            "stale": project.stale,
            "version": version_doc["version"],
            "version_index": version_index,
            "topic": topic_doc,
        }

    @app.get("/projects/{project_id}/wordcloud/{version_index}/{topic_id}")
    async def get_wordcloud(project_id: str, version_index: int, topic_id: int):
        project = store.get(project_id)
        snapshot = _current_snapshot(project)
        doc = snapshot.result.document
        if not (0 <= version_index < len(doc["versions"])):
            raise NotFound(f"no version index {version_index}")
        version_doc = doc["versions"][version_index]
        if not (0 <= topic_id < len(version_doc["topics"])):
            raise NotFound(f"no topic {topic_id}")
        return {
            "snapshot": snapshot.version,
            "checksum": snapshot.checksum,
            "stale": project.stale,
            "entries": version_doc["topics"][topic_id]["word_cloud"],
        }

    @app.get("/projects/{project_id}/reviews")
    async def get_reviews(
        project_id: str,
        version_index: int,
        topic_id: int,
        threshold: float | None = Query(default=None, ge=0.0, le=1.0),
        text: str | None = None,
        min_rating: float | None = None,
        date_from: str | None = None,
        date_to: str | None = None,
        offset: int = Query(default=0, ge=0),
        limit: int = Query(default=50, ge=1, le=500),
    ):
        project = store.get(project_id)
        snapshot = _current_snapshot(project)
        result = snapshot.result
        if not (0 <= version_index < len(result.states)):
            raise NotFound(f"no version index {version_index}")
        state = result.states[version_index]
        summaries = result.summaries[version_index]
        if not (0 <= topic_id < len(summaries)):
            raise NotFound(f"no topic {topic_id}")
        effective = (
            threshold if threshold is not None else result.config.review_threshold
        )
        listing = analytics.prioritize(
            state,
            summaries[topic_id],
            result.reviews_by_id(),
            topic_id,
            effective,
        )
        query = analytics.SearchQuery(
            text=text,
            min_rating=min_rating,
            date_from=_parse_date(date_from, "date_from"),
            date_to=_parse_date(date_to, "date_to"),
        )
        filtered = analytics.search(listing, query)
        page = filtered[offset : offset + limit]
        return {
            "snapshot": snapshot.version,
            "checksum": snapshot.checksum,
            "stale": project.stale,
            "total": len(filtered),
            "offset": offset,
            "threshold": effective,
            "reviews": [
                {
                    "review_id": p.review.review_id,
                    "text": p.review.text,
                    "rating": p.review.rating,
                    "post_date": p.review.post_date.isoformat(),
                    "version": p.review.version,
                    "region": p.review.region,
                    "relevance": p.relevance,
                    "highlights": [
                        {"start": h.start, "end": h.end, "word": h.word, "label": h.label}
                        for h in p.highlights
                    ],
                }
                for p in page
            ],
        }

    @app.get("/projects/{project_id}/snapshot")
    async def get_snapshot(project_id: str):
        project = store.get(project_id)
        snapshot = _current_snapshot(project)
        return {
            "snapshot": snapshot.version,
            "checksum": snapshot.checksum,
            "stale": project.stale,
            "document": snapshot.result.document,
        }

    return app
