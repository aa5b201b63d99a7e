"""Exception types shared across the pipeline."""


class ParkbanditError(Exception):
    """Base class for all errors raised by this package."""


# --- ingest ---------------------------------------------------------------

class FetchError(ParkbanditError):
    """Network or file failure while loading a domain record."""

    def __init__(self, message: str, cause: Exception | None = None):
        super().__init__(message)
        self.cause = cause


class EmptyBody(ParkbanditError):
    """The fetched body contained zero bytes."""


class DecodeError(ParkbanditError):
    """Total decode failure; lenient parsing could not recover any text."""


class Undetectable(ParkbanditError):
    """Too little alphabetic text to identify a language (< 20 chars)."""


# --- text pipeline --------------------------------------------------------

class UnsupportedLanguage(ParkbanditError):
    """No stopword list or tagger for the document language."""


class UnusableDomain(ParkbanditError):
    """A domain produced no candidates at all."""


# --- ranking / bandit -----------------------------------------------------

class InvalidParams(ParkbanditError):
    """Ranker parameters violate their constraints."""


class NumericalFailure(ParkbanditError):
    """The eigendecomposition iteration failed to converge."""


class InvalidHorizon(ParkbanditError):
    """2TK/delta <= 1, so the exploration width log is non-positive."""


class HorizonExhausted(ParkbanditError):
    """The bandit has already consumed all T rounds."""


class RewardOutOfRange(ParkbanditError):
    """A reward outside [0, 1] was offered to the bandit."""


# --- agreement ------------------------------------------------------------

class DegenerateMarginals(ParkbanditError):
    """Chance agreement is 1, so kappa is undefined."""


class NotEnoughOverlap(ParkbanditError):
    """Fewer than two items were scored by both raters."""


class UnequalRaterCounts(ParkbanditError):
    """Rows of a rating matrix disagree on the number of raters."""


# --- judge service --------------------------------------------------------

class IterationAlreadyOpen(ParkbanditError):
    """An iteration is already accepting judgments."""


class NoOpenIteration(ParkbanditError):
    """No iteration is currently accepting judgments."""


class AssessorFlagged(ParkbanditError):
    """The assessor failed too many traps and is locked out."""


class InvalidScore(ParkbanditError):
    """Score outside the 0-5 judgment scale."""


class UnknownTask(ParkbanditError):
    """No task with that id exists in the open iteration."""


class DuplicateJudgment(ParkbanditError):
    """The assessor already judged this task."""
