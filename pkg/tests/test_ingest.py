import datetime
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from reviewriver import ingest
from reviewriver.errors import (
    DateError,
    FieldCountError,
    RatingError,
    TextError,
    VersionError,
)

YOUTUBE_LINE = (
    "1.0******Pls fix this. The last update fails to load and play video."
    "******Mar 29, 2017******12.11******SG"
)


def test_youtube_example_line():
    r = ingest.parse_review_line(YOUTUBE_LINE, 7)
    assert r.rating == 1.0
    assert r.text == "Pls fix this. The last update fails to load and play video."
    assert r.post_date == datetime.date(2017, 3, 29)
    assert r.version == "12.11"
    assert r.region == "SG"
    assert r.review_id == 7


def test_minimal_line():
    r = ingest.parse_review_line("5.0******ok******Jan 1, 2020******1.0******US", 1)
    assert (r.rating, r.text, r.version, r.region) == (5.0, "ok", "1.0", "US")
    assert r.post_date == datetime.date(2020, 1, 1)


def test_four_fields_rejected():
    with pytest.raises(FieldCountError):
        ingest.parse_review_line(
            "5.0******broken line with four fields******Jan 1, 2020******1.0", 3
        )


def test_extra_separators_fold_into_text():
    line = "3.0******a******b******Feb 2, 2021******2.0******GB"
    r = ingest.parse_review_line(line, 1)
    assert r.text == "a******b"
    assert ingest.format_review_line(r) == line


@pytest.mark.parametrize(
    "line,err",
    [
        ("9.0******hi******Jan 1, 2020******1.0******US", RatingError),
        ("x******hi******Jan 1, 2020******1.0******US", RatingError),
        ("4.0******hi******January 1, 2020******1.0******US", DateError),
        ("4.0******hi******Jan 32, 2020******1.0******US", DateError),
        ("4.0******hi******Jjj 1, 2020******1.0******US", DateError),
        ("4.0******   ******Jan 1, 2020******1.0******US", TextError),
        ("4.0******hi******Jan 1, 2020******beta******US", VersionError),
        ("4.0******hi******Jan 1, 2020******1..2******US", VersionError),
    ],
)
def test_bad_lines(line, err):
    with pytest.raises(err):
        ingest.parse_review_line(line, 1)


def test_skip_policy_and_partition():
    text = "\n".join(
        [
            "5.0******fine******Jan 1, 2020******1.0******US",
            "bogus line",
            "4.0******also fine******Jan 2, 2020******1.0******US",
            "9.9******bad rating******Jan 3, 2020******1.0******US",
        ]
    )
    reviews, skipped = ingest.parse_review_file(text)
    assert len(reviews) == 2 and len(skipped) == 2
    corpora = ingest.group_by_version(reviews)
    assert sum(len(c.reviews) for c in corpora) + len(skipped) == 4
    assert skipped[0].report_line() == "line 2: FieldCountError"
    assert skipped[1].report_line() == "line 4: RatingError"


def test_version_comparison_segmentwise():
    # 12.2 < 12.11 numerically even though "12.2" > "12.11" as strings
    assert ingest.compare_versions("12.2", "12.11") == -1
    assert ingest.compare_versions("12.11", "12.2") == 1
    assert ingest.compare_versions("1.0", "1.0.0") == 0
    assert ingest.compare_versions("1.0", "1") == 0
    assert ingest.compare_versions("2.0", "10.0") == -1


def _review(version, day, line_no):
    return ingest.parse_review_line(
        f"4.0******hello there******Jan {day}, 2020******{version}******US", line_no
    )


def test_group_by_version_order_and_indices():
    reviews = [_review("2.0", 5, 1), _review("1.0", 2, 2), _review("1.0", 1, 3)]
    corpora = ingest.group_by_version(reviews)
    assert [c.version for c in corpora] == ["1.0", "2.0"]
    assert [c.index_t for c in corpora] == [0, 1]
    assert [r.review_id for r in corpora[0].reviews] == [3, 2]  # date order


def test_group_two_segment_numeric():
    reviews = [_review("12.11", 1, 1), _review("12.2", 2, 2)]
    corpora = ingest.group_by_version(reviews)
    assert [c.version for c in corpora] == ["12.2", "12.11"]


def test_group_empty():
    assert ingest.group_by_version([]) == []


ratings = st.integers(10, 50).map(lambda n: n / 10.0)
texts = st.text(
    st.characters(blacklist_characters="\n\r", blacklist_categories=("Cs",)),
    min_size=1,
    max_size=80,
).filter(lambda t: t.strip() and ingest.SEPARATOR not in t)
versions = st.lists(st.integers(0, 99), min_size=1, max_size=4).map(
    lambda seg: ".".join(str(s) for s in seg)
)
dates = st.dates(datetime.date(2000, 1, 1), datetime.date(2030, 12, 31))
regions = st.text(alphabet="ABCDEFGHIJKLMNOPQRSTUVWXYZ", min_size=2, max_size=2)


@given(ratings, texts, dates, versions, regions)
def test_roundtrip_record_level(rating, text, date, version, region):
    original = ingest.RawReview(
        review_id=1, rating=rating, text=text, post_date=date, version=version, region=region
    )
    line = ingest.format_review_line(original)
    assert ingest.parse_review_line(line, 1) == original


@given(st.lists(versions, min_size=1, max_size=20))
def test_version_total_order(version_list):
    key = ingest.version_key
    for a in version_list:
        for b in version_list:
            cmp_ab, cmp_ba = ingest.compare_versions(a, b), ingest.compare_versions(b, a)
            assert cmp_ab == -cmp_ba  # antisymmetry
            if cmp_ab == 0:
                assert key(a) == key(b)
    ordered = sorted(version_list, key=key)
    for x, y, z in zip(ordered, ordered[1:], ordered[2:]):  # transitivity of the sort
        assert ingest.compare_versions(x, y) <= 0 and ingest.compare_versions(y, z) <= 0
        assert ingest.compare_versions(x, z) <= 0


def test_roundtrip_bulk_runtime():
    rng = random.Random(42)
    months = list(ingest._MONTHS)
    lines = []
    for i in range(1, 2001):
        rating = rng.choice(["1.0", "2.0", "3.0", "4.5", "5.0"])
        text = " ".join(rng.choice(["ok", "bad", "fix", "love", "crash"]) for _ in range(5))
        date = f"{rng.choice(months)} {rng.randint(1, 28)}, {rng.randint(2015, 2024)}"
        version = f"{rng.randint(1, 20)}.{rng.randint(0, 9)}"
        lines.append(f"{rating}******{text}******{date}******{version}******US")
    for i, line in enumerate(lines, 1):
        parsed = ingest.parse_review_line(line, i)
        assert ingest.format_review_line(parsed) == line


@given(
    st.lists(
        st.sampled_from(
            [
                "5.0******fine******Jan 1, 2020******1.0******US",
                "4.0******also good******Feb 2, 2021******2.0******GB",
                "1.0******bad******Mar 3, 2022******1.5******DE",
                "random garbage",
                "9.0******rating out of range******Jan 1, 2020******1.0******US",
                "2.0******no date******soon******1.0******US",
                "",
            ]
        ),
        max_size=30,
    )
)
def test_partition_property(lines):
    text = "\n".join(lines)
    reviews, skipped = ingest.parse_review_file(text)
    corpora = ingest.group_by_version(reviews)
    non_blank = sum(1 for line in lines if line.strip())
    assert sum(len(c.reviews) for c in corpora) + len(skipped) == non_blank
