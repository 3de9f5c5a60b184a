"""
Domain Exceptions - Violated preconditions and failed computations.

All domain exceptions inherit from ForgeWordsError for consistent
error handling across the application. The CLI maps
ConfigurationError to exit code 2 and every other ForgeWordsError
to exit code 3.
"""
from __future__ import annotations


class ForgeWordsError(Exception):
    """Base exception for all ForgeWords errors."""

    def __init__(self, message: str, code: str | None = None) -> None:
        self.message = message
        self.code = code
        super().__init__(message)


# ============================================
# Word Errors (combinatorics-core)
# ============================================


class WordError(ForgeWordsError):
    """Base error for word and pattern issues."""

    pass


class InvalidWordError(WordError):
    """Letters fall outside the declared alphabet."""

    def __init__(self, reason: str) -> None:
        super().__init__(f"Invalid word: {reason}", code="INVALID_WORD")
        self.reason = reason


class NotExactlyOneError(WordError):
    """Word does not contain the pattern 123 exactly once."""

    def __init__(self, word: str, occurrences: int) -> None:
        super().__init__(
            f"Word '{word}' has {occurrences} occurrences of 123, expected exactly one",
            code="NOT_EXACTLY_ONE",
        )
        self.word = word
        self.occurrences = occurrences


class InvalidGoodPairError(WordError):
    """Pair of words violates a good-pair condition."""

    def __init__(self, reason: str) -> None:
        super().__init__(f"Invalid good pair: {reason}", code="INVALID_GOOD_PAIR")
        self.reason = reason


# ============================================
# Counting Errors (exact-counters)
# ============================================


class CountingError(ForgeWordsError):
    """Base error for exact counting issues."""

    pass


class CacheRecordError(CountingError):
    """Persisted avoider-count record is malformed."""

    def __init__(self, line_number: int, detail: str) -> None:
        super().__init__(
            f"Malformed cache record at line {line_number}: {detail}",
            code="CACHE_RECORD_ERROR",
        )
        self.line_number = line_number
        self.detail = detail


# ============================================
# Series Errors (series-engine)
# ============================================


class SeriesError(ForgeWordsError):
    """Base error for truncated series issues."""

    pass


class NonzeroConstantTermError(SeriesError):
    """Division by x of a series whose constant term is not zero."""

    def __init__(self, constant: object) -> None:
        super().__init__(
            f"Cannot divide by x: constant term is {constant}",
            code="NONZERO_CONSTANT_TERM",
        )
        self.constant = constant


class StrayCoefficientError(SeriesError):
    """Nonzero coefficient at an exponent that is not a multiple of r."""

    def __init__(self, index: int, r: int) -> None:
        super().__init__(
            f"Nonzero coefficient at x^{index}, not a multiple of {r}",
            code="STRAY_COEFFICIENT",
        )
        self.index = index
        self.r = r


class NoConvergenceError(SeriesError):
    """Fixed-point iteration kept changing coefficients past its pass budget."""

    def __init__(self, r: int, passes: int) -> None:
        super().__init__(
            f"g-system for r={r} still changing after {passes} passes",
            code="NO_CONVERGENCE",
        )
        self.r = r
        self.passes = passes


class TruncationMismatchError(SeriesError):
    """Series do not carry enough known coefficients for the request."""

    def __init__(self, required: int, available: int) -> None:
        super().__init__(
            f"Series known to order {available}, order {required} required",
            code="TRUNCATION_MISMATCH",
        )
        self.required = required
        self.available = available


# ============================================
# Guessing Errors (algebraic-lab, recurrence-lab)
# ============================================


class GuessError(ForgeWordsError):
    """Base error for guess-and-verify issues."""

    pass


class InsufficientTermsError(GuessError):
    """Not enough data for the requested ansatz plus guard window."""

    def __init__(self, required: int, available: int) -> None:
        super().__init__(
            f"Insufficient terms: {required} required, {available} available",
            code="INSUFFICIENT_TERMS",
        )
        self.required = required
        self.available = available


class NoRecurrenceFoundError(GuessError):
    """No operator within the order/degree budget annihilates the data."""

    def __init__(self, label: str, max_order: int, max_degree: int) -> None:
        super().__init__(
            f"No recurrence for {label} with order <= {max_order}, degree <= {max_degree}",
            code="NO_RECURRENCE_FOUND",
        )
        self.label = label
        self.max_order = max_order
        self.max_degree = max_degree


# ============================================
# Recurrence Errors (recurrence-lab)
# ============================================


class RecurrenceError(ForgeWordsError):
    """Base error for recurrence operator issues."""

    pass


class InvalidOperatorError(RecurrenceError):
    """Operator has no nonzero leading polynomial."""

    def __init__(self, reason: str) -> None:
        super().__init__(f"Invalid recurrence operator: {reason}", code="INVALID_OPERATOR")
        self.reason = reason


class LeadingCoefficientZeroError(RecurrenceError):
    """Leading polynomial vanishes where a new term must be solved for."""

    def __init__(self, n: int) -> None:
        super().__init__(
            f"Leading coefficient vanishes at n={n}",
            code="LEADING_COEFFICIENT_ZERO",
        )
        self.n = n


class NonIntegerStepError(RecurrenceError):
    """Solved term is not an integer."""

    def __init__(self, n: int) -> None:
        super().__init__(
            f"Recurrence step at n={n} does not produce an integer",
            code="NON_INTEGER_STEP",
        )
        self.n = n


# ============================================
# Asymptotics Errors (recurrence-lab)
# ============================================


class AsymptoticsError(ForgeWordsError):
    """Base error for asymptotic estimation issues."""

    pass


class TooShortError(AsymptoticsError):
    """Sequence is too short for extrapolation."""

    def __init__(self, length: int, minimum: int) -> None:
        super().__init__(
            f"Sequence of length {length} is too short, need at least {minimum}",
            code="TOO_SHORT",
        )
        self.length = length
        self.minimum = minimum


class NonPositiveTailError(AsymptoticsError):
    """Extrapolation window contains non-positive terms."""

    def __init__(self, index: int) -> None:
        super().__init__(
            f"Term at n={index} is not positive",
            code="NON_POSITIVE_TAIL",
        )
        self.index = index


# ============================================
# Configuration Errors (cli, fixtures)
# ============================================


class ConfigurationError(ForgeWordsError):
    """Base error for invalid user input and configuration."""

    pass


class InvalidMultiplicityListError(ConfigurationError):
    """Multiplicity list cannot be parsed or has negative entries."""

    def __init__(self, raw: str, reason: str) -> None:
        super().__init__(
            f"Invalid multiplicity list '{raw}': {reason}",
            code="INVALID_MULTIPLICITY_LIST",
        )
        self.raw = raw
        self.reason = reason


class InvalidRunConfigError(ConfigurationError):
    """Run configuration violates its bounds."""

    def __init__(self, errors: list[str]) -> None:
        super().__init__(
            f"Invalid run configuration: {'; '.join(errors)}",
            code="INVALID_RUN_CONFIG",
        )
        self.errors = errors


class FixtureFormatError(ConfigurationError):
    """Serialized object does not match its wire format."""

    def __init__(self, kind: str, detail: str) -> None:
        super().__init__(
            f"Malformed {kind} document: {detail}",
            code="FIXTURE_FORMAT_ERROR",
        )
        self.kind = kind
        self.detail = detail
