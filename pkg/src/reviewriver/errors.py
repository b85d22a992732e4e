"""Exception taxonomy.

Every error carries a machine-readable ``code`` so the HTTP layer can map
failures to distinct API error codes without string matching.
"""

from __future__ import annotations


class ReviewMiningError(Exception):
    code = "ERROR"


# --- ingest ---------------------------------------------------------------

class ReviewLineError(ReviewMiningError):
    """A single malformed review line; collected and skipped, never fatal."""

    code = "REVIEW_LINE"

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no

    @property
    def kind(self) -> str:
        return type(self).__name__


class FieldCountError(ReviewLineError):
    code = "FIELD_COUNT"


class RatingError(ReviewLineError):
    code = "RATING"


class DateError(ReviewLineError):
    code = "DATE"


class TextError(ReviewLineError):
    code = "TEXT"


class VersionError(ReviewLineError):
    code = "VERSION"


# --- preprocess -----------------------------------------------------------

class EmptyAfterCleaning(ReviewMiningError):
    """Review contributes no tokens; excluded from modeling, kept for display."""

    code = "EMPTY_AFTER_CLEANING"


# --- opinion --------------------------------------------------------------

class ConlluFormatError(ReviewMiningError):
    code = "CONLLU_FORMAT"

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


# --- embedding ------------------------------------------------------------

class EmptyVocab(ReviewMiningError):
    code = "EMPTY_VOCAB"


class DimMismatch(ReviewMiningError):
    code = "DIM_MISMATCH"


class OutOfVocab(ReviewMiningError):
    code = "OUT_OF_VOCAB"

    def __init__(self, word: str):
        super().__init__(f"not in vocabulary: {word!r}")
        self.word = word


class ZeroVector(ReviewMiningError):
    code = "ZERO_VECTOR"


# --- sentiment ------------------------------------------------------------

class LexiconFormatError(ReviewMiningError):
    code = "LEXICON_FORMAT"

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class ConflictWithinRequest(ReviewMiningError):
    code = "SEED_CONFLICT"


class NoUsableSeeds(ReviewMiningError):
    code = "NO_USABLE_SEEDS"

    def __init__(self, polarity: str):
        super().__init__(f"no usable {polarity} seed words in the embedding vocabulary")
        self.polarity = polarity


# --- topics ---------------------------------------------------------------

class EmptyCorpus(ReviewMiningError):
    code = "EMPTY_CORPUS"


class KTooLarge(ReviewMiningError):
    code = "K_TOO_LARGE"


class NoScorableWords(ReviewMiningError):
    code = "NO_SCORABLE_WORDS"


# --- analytics ------------------------------------------------------------

class InvalidRange(ReviewMiningError):
    code = "INVALID_RANGE"


# --- config / server ------------------------------------------------------

class ConfigError(ReviewMiningError):
    code = "INVALID_CONFIG"


class ValidationFailed(ReviewMiningError):
    code = "VALIDATION_FAILED"

    def __init__(self, report: list[str]):
        super().__init__("; ".join(report) or "validation failed")
        self.report = report


class AlreadyRunning(ReviewMiningError):
    code = "ALREADY_RUNNING"


class NotReady(ReviewMiningError):
    code = "NOT_READY"


class NotFound(ReviewMiningError):
    code = "NOT_FOUND"
