"""
Weight enumerators - h_r (exactly one 123, weighted by length) and its OGF f_r.

h_r is assembled from the g^(0,*) entries: the factor
g^(0, i mod r) - x*g^(0, i-1) - [i = 0 mod r] counts good sigma1 words,
its mirror counts good sigma2 words, and the shared pivot is removed by
dividing by x.
"""
from __future__ import annotations

from forge_words.application.series.g_system import solve_g_system
from forge_words.domain.value_objects import GTable, TruncatedSeries, decimate, series_div_x
from forge_words.infrastructure.logging import LogService

_logger = LogService(__name__)


def _times_x(series: TruncatedSeries) -> TruncatedSeries:
    return series.shift(1).truncate(series.order)


def _good_factor(table: GTable, index: int, previous: int) -> TruncatedSeries:
    """g^(0, index) - x * g^(0, previous) - [index = 0]."""
    current = table.get(0, index)
    delta = 1 if index == 0 else 0
    indicator = TruncatedSeries.constant(delta, current.order)
    return current - _times_x(table.get(0, previous)) - indicator


def h_from_table(table: GTable) -> TruncatedSeries:
    """
    Sum over i = 1..r of the good-sigma1 and good-sigma2 factors, divided by x.

    The result is known to one order less than the table.

    Raises:
        NonzeroConstantTermError: If the summed products have a constant term
    """
    r = table.r
    total = TruncatedSeries.zero(table.order)
    for i in range(1, r + 1):
        first = _good_factor(table, i % r, i - 1)
        second = _good_factor(table, (r + 1 - i) % r, r - i)
        total = total + first * second
    return series_div_x(total)


def compute_h(r: int, order: int) -> TruncatedSeries:
    """
    h_r to the given order: words with r copies of each letter and exactly one 123, by length.

    Raises:
        NonzeroConstantTermError: Propagated from the division by x
    """
    table = solve_g_system(r, order + 1)
    return h_from_table(table).truncate(order)


def compute_f(r: int, n_terms: int) -> TruncatedSeries:
    """
    f_r with n_terms known coefficients; coefficient n is a_r(n).

    Args:
        r: Copies of each letter
        n_terms: Number of coefficients (0 gives the empty series of order -1)
    """
    if n_terms <= 0:
        return TruncatedSeries(())
    with LogService.timed("compute_f", logger=_logger, r=r, terms=n_terms):
        h = compute_h(r, r * n_terms + r)
        return decimate(h, r).truncate(n_terms - 1)


def warmup_h1(table: GTable) -> TruncatedSeries:
    """(g^(0,0) - x*g^(0,0) - 1)^2 / x for a table with r = 1."""
    if table.r != 1:
        raise ValueError("warmup_h1 needs the r=1 table")
    g = table.get(0, 0)
    factor = g - _times_x(g) - TruncatedSeries.one(g.order)
    return series_div_x(factor * factor)


def warmup_h2(table: GTable) -> TruncatedSeries:
    """2*(g^(0,0) - x*g^(0,1) - 1)*(g^(0,1) - x*g^(0,0)) / x for a table with r = 2."""
    if table.r != 2:
        raise ValueError("warmup_h2 needs the r=2 table")
    g00, g01 = table.get(0, 0), table.get(0, 1)
    first = g00 - _times_x(g01) - TruncatedSeries.one(g00.order)
    second = g01 - _times_x(g00)
    return series_div_x(2 * (first * second))


def avoider_ogf(r: int, n_terms: int) -> TruncatedSeries:
    """
    f_r^(0,0): coefficient n is the number of 123-avoiding words with r copies of n letters.
    """
    if n_terms <= 0:
        return TruncatedSeries(())
    table = solve_g_system(r, r * (n_terms - 1))
    return decimate(table.get(0, 0), r).truncate(n_terms - 1)
