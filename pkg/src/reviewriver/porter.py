"""Porter suffix-stripping stemmer.

Implements Porter (1980) including the departures that the author's
reference ANSI C implementation made canonical (step 1b's at/bl/iz
special cases, step 2's bli->ble and logi->log, words of length <= 2
returned untouched).  Characters outside a-z (digits can occur in app
review tokens) are treated as consonants, matching the reference code.

The whole module is deliberately dependency-free and pure: ``stem`` is a
function from string to string, deterministic, and is pinned against a
frozen vocabulary of reference-implementation outputs in the test suite.
"""

from __future__ import annotations

_VOWELS = frozenset("aeiou")


def _is_consonant(word: str, i: int) -> bool:
    ch = word[i]
    if ch in _VOWELS:
        return False
    if ch == "y":
        return True if i == 0 else not _is_consonant(word, i - 1)
    return True


def _measure(word: str, end: int) -> int:
    """Number of VC sequences in word[:end] (the m of the algorithm)."""
    m = 0
    i = 0
    # skip initial consonant cluster
    while i < end and _is_consonant(word, i):
        i += 1
    while i < end:
        # inside a vowel cluster
        while i < end and not _is_consonant(word, i):
            i += 1
        if i >= end:
            return m
        m += 1
        while i < end and _is_consonant(word, i):
            i += 1
    return m


def _has_vowel(word: str, end: int) -> bool:
    return any(not _is_consonant(word, i) for i in range(end))


def _ends_double_consonant(word: str) -> bool:
    return (
        len(word) >= 2
        and word[-1] == word[-2]
        and _is_consonant(word, len(word) - 1)
    )


def _ends_cvc(word: str) -> bool:
    # consonant-vowel-consonant, final consonant not w, x or y (the *o rule)
    if len(word) < 3:
        return False
    i = len(word) - 1
    if not _is_consonant(word, i) or _is_consonant(word, i - 1) or not _is_consonant(word, i - 2):
        return False
    return word[i] not in "wxy"


def _replace(word: str, suffix: str, replacement: str, min_measure: int) -> str | None:
    """word with suffix swapped for replacement if m(stem) > min_measure, else None."""
    if not word.endswith(suffix):
        return None
    stem_len = len(word) - len(suffix)
    if _measure(word, stem_len) > min_measure:
        return word[:stem_len] + replacement
    return word


def _step1ab(word: str) -> str:
    if word.endswith("sses"):
        word = word[:-2]
    elif word.endswith("ies"):
        word = word[:-2]
    elif not word.endswith("ss") and word.endswith("s"):
        word = word[:-1]

    if word.endswith("eed"):
        if _measure(word, len(word) - 3) > 0:
            word = word[:-1]
        return word

    for suffix in ("ed", "ing"):
        if word.endswith(suffix):
            stem = word[: len(word) - len(suffix)]
            if not _has_vowel(stem, len(stem)):
                return word
            if stem.endswith("at") or stem.endswith("bl") or stem.endswith("iz"):
                return stem + "e"
            if _ends_double_consonant(stem) and stem[-1] not in "lsz":
                return stem[:-1]
            if _measure(stem, len(stem)) == 1 and _ends_cvc(stem):
                return stem + "e"
            return stem
    return word


def _step1c(word: str) -> str:
    if word.endswith("y") and _has_vowel(word, len(word) - 1):
        return word[:-1] + "i"
    return word


_STEP2 = (
    ("ational", "ate"), ("tional", "tion"),
    ("enci", "ence"), ("anci", "ance"),
    ("izer", "ize"),
    ("bli", "ble"),  # departure: paper has abli -> able
    ("alli", "al"), ("entli", "ent"), ("eli", "e"), ("ousli", "ous"),
    ("ization", "ize"), ("ation", "ate"), ("ator", "ate"),
    ("alism", "al"), ("iveness", "ive"), ("fulness", "ful"), ("ousness", "ous"),
    ("aliti", "al"), ("iviti", "ive"), ("biliti", "ble"),
    ("logi", "log"),  # departure: added in the reference implementation
)

_STEP3 = (
    ("icate", "ic"), ("ative", ""), ("alize", "al"),
    ("iciti", "ic"), ("ical", "ic"), ("ful", ""), ("ness", ""),
)

_STEP4 = (
    "al", "ance", "ence", "er", "ic", "able", "ible", "ant",
    "ement", "ment", "ent", "ion", "ou", "ism", "ate", "iti",
    "ous", "ive", "ize",
)


def _step2(word: str) -> str:
    # the reference dispatches on the penultimate character; a linear scan
    # over suffixes ordered longest-variant-first is equivalent because the
    # suffix sets are prefix-free within each ending
    for suffix, replacement in _STEP2:
        if word.endswith(suffix):
            return _replace(word, suffix, replacement, 0) or word
    return word


def _step3(word: str) -> str:
    for suffix, replacement in _STEP3:
        if word.endswith(suffix):
            return _replace(word, suffix, replacement, 0) or word
    return word


def _step4(word: str) -> str:
    for suffix in _STEP4:
        if not word.endswith(suffix):
            continue
        stem_len = len(word) - len(suffix)
        if suffix == "ion" and (stem_len == 0 or word[stem_len - 1] not in "st"):
            continue  # ion only strips after s or t; other suffixes end the scan
        if _measure(word, stem_len) > 1:
            return word[:stem_len]
        return word
    return word


def _step5(word: str) -> str:
    if word.endswith("e"):
        m = _measure(word, len(word))
        if m > 1 or (m == 1 and not _ends_cvc(word[:-1])):
            word = word[:-1]
    if word.endswith("ll") and _measure(word, len(word)) > 1:
        word = word[:-1]
    return word


def stem(word: str) -> str:
    """Stem a single lowercase token; words of length <= 2 pass through."""
    if len(word) <= 2:
        return word
    word = _step1ab(word)
    word = _step1c(word)
    word = _step2(word)
    word = _step3(word)
    word = _step4(word)
    return _step5(word)
