"""
Value Objects - Immutable mathematical objects.

Exports:
    - TruncatedSeries: Power series with exact rational coefficients
    - GTable: Weight enumerators g_r^(i,j) with symmetric lookup
    - BivariatePolynomial: Integer polynomial P(x, y)
    - RecurrenceOperator: P-recursive operator Sum_k p_k(n) N^k
    - IntegerSequence: Finite integer sequence prefix
    - AsymptoticEstimate: Extrapolated (mu, alpha, C)
    - ConjectureReport: Estimate judged against the growth conjecture
"""
from forge_words.domain.value_objects.asymptotics import (
    AsymptoticEstimate,
    ConjectureReport,
)
from forge_words.domain.value_objects.bivariate_polynomial import BivariatePolynomial
from forge_words.domain.value_objects.g_table import GTable, g_keys
from forge_words.domain.value_objects.integer_sequence import IntegerSequence
from forge_words.domain.value_objects.recurrence_operator import RecurrenceOperator
from forge_words.domain.value_objects.truncated_series import (
    TruncatedSeries,
    decimate,
    series_add,
    series_div_x,
    series_mul,
    series_scale,
    series_shift,
    series_sub,
)

__all__ = [
    "TruncatedSeries",
    "series_add",
    "series_sub",
    "series_scale",
    "series_shift",
    "series_mul",
    "series_div_x",
    "decimate",
    "GTable",
    "g_keys",
    "BivariatePolynomial",
    "RecurrenceOperator",
    "IntegerSequence",
    "AsymptoticEstimate",
    "ConjectureReport",
]
