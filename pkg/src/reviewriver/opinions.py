"""Aspect-opinion pair extraction from dependency-parsed sentences.

Parses are consumed from a CoNLL-U sidecar file (any external parser can
produce it), aligned to reviews via ``# review_id = <n>`` comment lines.
Three dependency relations yield pairs:

    nsubj       aspect = dependent, opinion = head   ("This app crashed")
    dobj / obj  aspect = dependent, opinion = head   ("I dislike the app")
    amod        aspect = head, opinion = dependent   ("the cheapest flight")

The aspect token must be a NOUN, PROPN or PRON.  Opinion lemmas are
lowercased and stemmed so they line up with the embedding vocabulary.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import porter
from .errors import ConlluFormatError

ASPECT_POS = frozenset({"NOUN", "PROPN", "PRON"})

NOUN_OF_SUBJECT = "noun-of-subject"
DIRECT_OBJECT = "direct-object"
ADJECTIVE_MODIFIER = "adjective-modifier"
RELATIONS = frozenset({NOUN_OF_SUBJECT, DIRECT_OBJECT, ADJECTIVE_MODIFIER})


@dataclass(frozen=True)
class ParsedToken:
    index: int
    surface: str
    lemma: str
    upos: str
    head: int
    deprel: str


@dataclass(frozen=True)
class OpinionPair:
    aspect: str
    opinion: str
    relation: str
    review_id: int
    sentence_index: int


@dataclass
class AlignedSentence:
    review_id: int
    sentence_index: int
    tokens: list[ParsedToken]


def _parse_row(line: str, line_no: int) -> ParsedToken | None:
    columns = line.split("\t")
    if len(columns) != 10:
        raise ConlluFormatError(line_no, f"expected 10 columns, got {len(columns)}")
    token_id = columns[0]
    if "-" in token_id or "." in token_id:
        return None  # multiword-token range or empty node
    try:
        index = int(token_id)
        head = int(columns[6])
    except ValueError:
        raise ConlluFormatError(line_no, f"non-integer ID or HEAD in {token_id!r}") from None
    if index < 1:
        raise ConlluFormatError(line_no, f"token index {index} out of range")
    return ParsedToken(
        index=index,
        surface=columns[1],
        lemma=columns[2],
        upos=columns[3],
        head=head,
        deprel=columns[7],
    )


def _check_sentence(tokens: list[ParsedToken], line_no: int) -> None:
    top = max(t.index for t in tokens)
    for t in tokens:
        if not (0 <= t.head <= top) or t.head == t.index:
            raise ConlluFormatError(line_no, f"token {t.index}: bad head {t.head}")


def parse_conllu(doc: str) -> list[list[ParsedToken]]:
    """Sentences as token lists; `#` comments and blank separators handled."""
    sentences: list[list[ParsedToken]] = []
    current: list[ParsedToken] = []
    for line_no, line in enumerate(doc.splitlines(), start=1):
        if line.startswith("#"):
            continue
        if not line.strip():
            if current:
                _check_sentence(current, line_no)
                sentences.append(current)
                current = []
            continue
        token = _parse_row(line, line_no)
        if token is not None:
            current.append(token)
    if current:
        _check_sentence(current, line_no)
        sentences.append(current)
    return sentences


def read_aligned_conllu(doc: str) -> list[AlignedSentence]:
    """Like parse_conllu but tracking `# review_id = <n>` alignment comments.

    Sentence indices restart at 0 for each review id block.
    """
    aligned: list[AlignedSentence] = []
    current: list[ParsedToken] = []
    review_id = -1
    sentence_index = 0

    def flush(line_no: int) -> None:
        nonlocal current, sentence_index
        if current:
            _check_sentence(current, line_no)
            aligned.append(AlignedSentence(review_id, sentence_index, current))
            sentence_index += 1
            current = []

    for line_no, line in enumerate(doc.splitlines(), start=1):
        if line.startswith("#"):
            stripped = line[1:].strip()
            if stripped.startswith("review_id"):
                _, _, value = stripped.partition("=")
                flush(line_no)
                try:
                    review_id = int(value.strip())
                except ValueError:
                    raise ConlluFormatError(line_no, f"bad review_id {value!r}") from None
                sentence_index = 0
            continue
        if not line.strip():
            flush(line_no)
            continue
        token = _parse_row(line, line_no)
        if token is not None:
            current.append(token)
    flush(line_no if doc else 0)
    return aligned


def extract_pairs(
    sentence: list[ParsedToken], review_id: int = -1, sentence_index: int = 0
) -> list[OpinionPair]:
    """Aspect-opinion pairs from one parsed sentence (order-independent)."""
    by_index = {t.index: t for t in sentence}
    pairs = []
    for dep in sorted(sentence, key=lambda t: t.index):
        head = by_index.get(dep.head)
        if head is None:
            continue
        if dep.deprel == "nsubj" or dep.deprel in ("dobj", "obj"):
            aspect, opinion = dep, head
            relation = NOUN_OF_SUBJECT if dep.deprel == "nsubj" else DIRECT_OBJECT
        elif dep.deprel == "amod":
            aspect, opinion = head, dep
            relation = ADJECTIVE_MODIFIER
        else:
            continue
        if aspect.upos not in ASPECT_POS:
            continue
        pairs.append(
            OpinionPair(
                aspect=aspect.lemma.lower(),
                opinion=porter.stem(opinion.lemma.lower()),
                relation=relation,
                review_id=review_id,
                sentence_index=sentence_index,
            )
        )
    return pairs


def extract_all_pairs(aligned: list[AlignedSentence]) -> list[OpinionPair]:
    pairs: list[OpinionPair] = []
    for sent in aligned:
        pairs.extend(extract_pairs(sent.tokens, sent.review_id, sent.sentence_index))
    return pairs


def validate_alignment(aligned: list[AlignedSentence], review_ids: set[int]) -> list[int]:
    """Review ids referenced by the sidecar but absent from the review file."""
    orphans = sorted({s.review_id for s in aligned} - review_ids)
    return orphans
