"""
Domain Layer - Words, series, polynomials and operators.

This layer contains:
    - entities/: Words, multiplicity lists, good pairs, run configuration
    - value_objects/: Immutable mathematical objects (TruncatedSeries, GTable, ...)
    - exceptions.py: Domain-specific exceptions
"""
from forge_words.domain.exceptions import (
    AsymptoticsError,
    CacheRecordError,
    ConfigurationError,
    CountingError,
    FixtureFormatError,
    ForgeWordsError,
    GuessError,
    InsufficientTermsError,
    InvalidGoodPairError,
    InvalidMultiplicityListError,
    InvalidOperatorError,
    InvalidRunConfigError,
    InvalidWordError,
    LeadingCoefficientZeroError,
    NoConvergenceError,
    NoRecurrenceFoundError,
    NonIntegerStepError,
    NonPositiveTailError,
    NonzeroConstantTermError,
    NotExactlyOneError,
    RecurrenceError,
    SeriesError,
    StrayCoefficientError,
    TooShortError,
    TruncationMismatchError,
    WordError,
)

__all__ = [
    "ForgeWordsError",
    "WordError",
    "InvalidWordError",
    "NotExactlyOneError",
    "InvalidGoodPairError",
    "CountingError",
    "CacheRecordError",
    "SeriesError",
    "NonzeroConstantTermError",
    "StrayCoefficientError",
    "NoConvergenceError",
    "TruncationMismatchError",
    "GuessError",
    "InsufficientTermsError",
    "NoRecurrenceFoundError",
    "RecurrenceError",
    "InvalidOperatorError",
    "LeadingCoefficientZeroError",
    "NonIntegerStepError",
    "AsymptoticsError",
    "TooShortError",
    "NonPositiveTailError",
    "ConfigurationError",
    "InvalidMultiplicityListError",
    "InvalidRunConfigError",
    "FixtureFormatError",
]
