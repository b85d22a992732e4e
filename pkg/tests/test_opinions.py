import random

import pytest

from fixtures import (
    APP_CRASHED,
    CHEAPEST_FLIGHT,
    DISLIKE_APP,
    SLOW_GLITCHES,
    conllu_row as row,
)
from reviewriver import opinions
from reviewriver.errors import ConlluFormatError
from reviewriver.opinions import (
    ADJECTIVE_MODIFIER,
    DIRECT_OBJECT,
    NOUN_OF_SUBJECT,
    RELATIONS,
    ParsedToken,
)


def parse_one(doc):
    sentences = opinions.parse_conllu(doc)
    assert len(sentences) == 1
    return sentences[0]


def test_noun_of_subject_example():
    pairs = opinions.extract_pairs(parse_one(APP_CRASHED))
    assert [(p.aspect, p.opinion, p.relation) for p in pairs] == [
        ("app", "crash", NOUN_OF_SUBJECT)
    ]


def test_direct_object_example():
    # the pronoun subject "I" legitimately pairs too (PRON aspects are kept)
    pairs = opinions.extract_pairs(parse_one(DISLIKE_APP))
    assert [(p.aspect, p.opinion, p.relation) for p in pairs] == [
        ("i", "dislik", NOUN_OF_SUBJECT),
        ("app", "dislik", DIRECT_OBJECT),
    ]
    assert ("app", "dislik", DIRECT_OBJECT) == (
        pairs[1].aspect, pairs[1].opinion, pairs[1].relation
    )


def test_adjective_modifier_example():
    # "flight" is also the object of "Book", so the rule yields both pairs
    pairs = opinions.extract_pairs(parse_one(CHEAPEST_FLIGHT))
    assert [(p.aspect, p.opinion, p.relation) for p in pairs] == [
        ("flight", "cheapest", ADJECTIVE_MODIFIER),
        ("flight", "book", DIRECT_OBJECT),
    ]


def test_coordinated_pronoun_subjects():
    pairs = opinions.extract_pairs(parse_one(SLOW_GLITCHES))
    assert [(p.aspect, p.opinion) for p in pairs] == [("it", "slow"), ("it", "glitch")]
    assert all(p.relation == NOUN_OF_SUBJECT for p in pairs)


def test_aspect_pos_filter():
    # nsubj whose dependent is a verb form: no pair
    doc = "\n".join(
        [
            row(1, "running", "run", "VERB", 2, "nsubj"),
            row(2, "helps", "help", "VERB", 0, "root"),
        ]
    )
    assert opinions.extract_pairs(parse_one(doc)) == []


def test_passive_subject_excluded():
    doc = "\n".join(
        [
            row(1, "app", "app", "NOUN", 2, "nsubj:pass"),
            row(2, "broken", "break", "VERB", 0, "root"),
        ]
    )
    assert opinions.extract_pairs(parse_one(doc)) == []


def test_parse_conllu_minimal():
    doc = row(1, "it", "it", "PRON", 2, "nsubj") + "\n" + row(2, "is", "be", "AUX", 0, "root")
    sentences = opinions.parse_conllu(doc)
    assert len(sentences) == 1 and len(sentences[0]) == 2


def test_parse_conllu_skips_ranges_and_empty_nodes():
    doc = "\n".join(
        [
            "3-4\tdon't\t_\t_\t_\t_\t_\t_\t_\t_",
            row(3, "do", "do", "AUX", 0, "root"),
            row(4, "n't", "not", "PART", 3, "advmod"),
            "4.1\tghost\t_\t_\t_\t_\t_\t_\t_\t_",
        ]
    )
    sentences = opinions.parse_conllu(doc)
    assert [t.index for t in sentences[0]] == [3, 4]


def test_parse_conllu_nine_columns_rejected():
    with pytest.raises(ConlluFormatError) as exc:
        opinions.parse_conllu("1\ta\ta\tX\t_\t_\t0\troot\t_")
    assert exc.value.line_no == 1


def test_parse_conllu_bad_head_rejected():
    with pytest.raises(ConlluFormatError):
        opinions.parse_conllu(row(1, "a", "a", "X", 9, "root"))
    with pytest.raises(ConlluFormatError):
        opinions.parse_conllu(row(1, "a", "a", "X", 1, "root"))


def test_relations_are_closed_set():
    for doc in (APP_CRASHED, DISLIKE_APP, CHEAPEST_FLIGHT, SLOW_GLITCHES):
        for p in opinions.extract_pairs(parse_one(doc)):
            assert p.relation in RELATIONS


def test_extract_is_order_invariant():
    sentence = parse_one(SLOW_GLITCHES)
    expected = opinions.extract_pairs(sentence)
    rng = random.Random(3)
    for _ in range(20):
        shuffled = sentence[:]
        rng.shuffle(shuffled)
        assert opinions.extract_pairs(shuffled) == expected


def test_pair_count_bounded_by_tokens():
    for doc in (APP_CRASHED, DISLIKE_APP, CHEAPEST_FLIGHT, SLOW_GLITCHES):
        sentence = parse_one(doc)
        assert len(opinions.extract_pairs(sentence)) <= len(sentence)


def test_aligned_reader_and_orphans():
    doc = "\n".join(
        [
            "# review_id = 2",
            row(1, "app", "app", "NOUN", 2, "nsubj"),
            row(2, "crashed", "crash", "VERB", 0, "root"),
            "",
            row(1, "it", "it", "PRON", 2, "nsubj"),
            row(2, "froze", "freeze", "VERB", 0, "root"),
            "",
            "# review_id = 9",
            row(1, "fine", "fine", "ADJ", 0, "root"),
        ]
    )
    aligned = opinions.read_aligned_conllu(doc)
    assert [(s.review_id, s.sentence_index) for s in aligned] == [(2, 0), (2, 1), (9, 0)]
    assert opinions.validate_alignment(aligned, {2}) == [9]
    pairs = opinions.extract_all_pairs(aligned)
    assert {(p.review_id, p.aspect, p.opinion) for p in pairs} == {
        (2, "app", "crash"),
        (2, "it", "freez"),
    }
