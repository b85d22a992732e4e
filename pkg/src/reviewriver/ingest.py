"""Review dump parsing and version grouping.

Input format: one review per line, five fields separated by the literal
``******`` in the order rating / text / post date / version / region.
Malformed lines are skipped and reported, never fatal.
"""

from __future__ import annotations

import datetime
import re
from dataclasses import dataclass, field

from .errors import (
    DateError,
    FieldCountError,
    RatingError,
    ReviewLineError,
    TextError,
    VersionError,
)

SEPARATOR = "******"

_MONTHS = {
    "Jan": 1, "Feb": 2, "Mar": 3, "Apr": 4, "May": 5, "Jun": 6,
    "Jul": 7, "Aug": 8, "Sep": 9, "Oct": 10, "Nov": 11, "Dec": 12,
}
_MONTH_NAMES = {v: k for k, v in _MONTHS.items()}
_DATE_RE = re.compile(r"^([A-Z][a-z]{2}) (\d{1,2}), (\d{4})$")


@dataclass(frozen=True)
class RawReview:
    review_id: int
    rating: float
    text: str
    post_date: datetime.date
    version: str
    region: str


@dataclass
class SkippedLine:
    line_no: int
    kind: str
    message: str

    def report_line(self) -> str:
        return f"line {self.line_no}: {self.kind}"


@dataclass
class VersionCorpus:
    version: str
    index_t: int
    reviews: list[RawReview] = field(default_factory=list)


def version_key(version: str) -> tuple[int, ...]:
    """Numeric segments with trailing zeros stripped, so '1.0' == '1.0.0'."""
    segments = [int(s) for s in version.split(".")]
    while len(segments) > 1 and segments[-1] == 0:
        segments.pop()
    return tuple(segments)


def compare_versions(a: str, b: str) -> int:
    """Segment-wise numeric comparison; missing segments count as 0."""
    ka, kb = version_key(a), version_key(b)
    return (ka > kb) - (ka < kb)


def _parse_date(raw: str, line_no: int) -> datetime.date:
    # explicit month table: English abbreviations only, locale-independent
    m = _DATE_RE.match(raw)
    if not m or m.group(1) not in _MONTHS:
        raise DateError(line_no, f"unparseable date {raw!r}")
    try:
        return datetime.date(int(m.group(3)), _MONTHS[m.group(1)], int(m.group(2)))
    except ValueError as exc:
        raise DateError(line_no, f"invalid date {raw!r}: {exc}") from None


def _validate_version(raw: str, line_no: int) -> str:
    segments = raw.split(".")
    if not segments or not all(s.isdigit() and s.isascii() for s in segments):
        raise VersionError(line_no, f"version {raw!r} has no valid numeric segments")
    return raw


def parse_review_line(line: str, line_no: int) -> RawReview:
    """Parse one physical line; raises a ReviewLineError subclass on bad input."""
    parts = line.split(SEPARATOR)
    if len(parts) < 5:
        raise FieldCountError(line_no, f"expected 5 fields, got {len(parts)}")
    if len(parts) > 5:
        # text is the only free-form field: fold extra separators back into it
        parts = [parts[0], SEPARATOR.join(parts[1:-3]), parts[-3], parts[-2], parts[-1]]
    rating_raw, text, date_raw, version_raw, region = parts
    try:
        rating = float(rating_raw)
    except ValueError:
        raise RatingError(line_no, f"non-numeric rating {rating_raw!r}") from None
    if not (1.0 <= rating <= 5.0):
        raise RatingError(line_no, f"rating {rating} outside [1.0, 5.0]")
    if not text.strip():
        raise TextError(line_no, "empty review text")
    return RawReview(
        review_id=line_no,
        rating=rating,
        text=text,
        post_date=_parse_date(date_raw, line_no),
        version=_validate_version(version_raw, line_no),
        region=region,
    )


def format_review_line(review: RawReview) -> str:
    """Inverse of parse_review_line for texts not containing the separator."""
    date = review.post_date
    date_str = f"{_MONTH_NAMES[date.month]} {date.day}, {date.year}"
    return SEPARATOR.join(
        [repr(review.rating), review.text, date_str, review.version, review.region]
    )


def parse_review_file(text: str) -> tuple[list[RawReview], list[SkippedLine]]:
    """Parse a whole dump; review_id is the 1-based physical line number."""
    reviews: list[RawReview] = []
    skipped: list[SkippedLine] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            reviews.append(parse_review_line(line, line_no))
        except ReviewLineError as exc:
            skipped.append(SkippedLine(line_no, exc.kind, str(exc)))
    return reviews, skipped


def skip_report(skipped: list[SkippedLine]) -> str:
    return "\n".join(s.report_line() for s in skipped)


def group_by_version(reviews: list[RawReview]) -> list[VersionCorpus]:
    """Group into per-version corpora ordered by numeric version comparison.

    Within a corpus reviews are ordered by post date then review id.  Version
    strings that compare equal ("1.0" vs "1.0.0") share a corpus; the shortest
    spelling is kept as the display version.
    """
    groups: dict[tuple[int, ...], list[RawReview]] = {}
    for review in reviews:
        groups.setdefault(version_key(review.version), []).append(review)
    corpora = []
    for index_t, key in enumerate(sorted(groups)):
        members = groups[key]
        members.sort(key=lambda r: (r.post_date, r.review_id))
        display = min({m.version for m in members}, key=lambda v: (len(v), v))
        corpora.append(VersionCorpus(version=display, index_t=index_t, reviews=members))
    return corpora
