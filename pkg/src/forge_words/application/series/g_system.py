"""
g-system - Weight enumerators of the 123-avoiding classes W_r^(i,j).

For 0 <= i <= j <= r-1:

    g^(i,j) = [i = j = 0]
              + x * sum_{t<r} g^(i,t) * g^((r-t) mod r, (j-1) mod r)
              + sum_{m<i} x^(m+1) * g^(i-m, j-1)

with g^(s,k) = g^(k,s). Every non-constant term carries a factor of x,
so the coefficient of x^m on the right only reads coefficients below m.
"""
from __future__ import annotations

from fractions import Fraction

from forge_words.domain import NoConvergenceError
from forge_words.domain.value_objects import GTable, TruncatedSeries, g_keys
from forge_words.infrastructure.logging import LogService

_logger = LogService(__name__)

Key = tuple[int, int]


def _sym(s: int, k: int) -> Key:
    return (s, k) if s <= k else (k, s)


def _product_terms(r: int, i: int, j: int) -> list[tuple[Key, Key]]:
    """Factor pairs of the quadratic sum for entry (i, j)."""
    return [(_sym(i, t), _sym((r - t) % r, (j - 1) % r)) for t in range(r)]


def _linear_terms(i: int, j: int) -> list[tuple[int, Key]]:
    """(shift, key) pairs of the x^(m+1) sum for entry (i, j)."""
    return [(m + 1, _sym(i - m, j - 1)) for m in range(i)]


def _convolution_at(a: list[int], b: list[int], k: int) -> int:
    """Coefficient k of a*b."""
    total = 0
    for s in range(k + 1):
        left = a[s]
        if left:
            right = b[k - s]
            if right:
                total += left * right
    return total


def solve_g_system(r: int, order: int) -> GTable:
    """
    Solve the g-system to the given truncation order by x-adic fixed-point passes.

    Starts from the all-zero table. Each pass settles coefficients in
    increasing x-degree, updating entries in place; passes repeat until
    one changes nothing.

    Args:
        r: Copies of every inner letter (r >= 1)
        order: Truncation order N (N >= 0)

    Returns:
        GTable with every entry known to order N

    Raises:
        NoConvergenceError: If a pass beyond N+2 still changes a coefficient
    """
    if r < 1:
        raise ValueError("r must be positive")
    if order < 0:
        raise ValueError("order must be nonnegative")

    keys = g_keys(r)
    coefficients: dict[Key, list[int]] = {key: [0] * (order + 1) for key in keys}
    products = {key: _product_terms(r, *key) for key in keys}
    linears = {key: _linear_terms(*key) for key in keys}
    max_passes = order + 2

    with LogService.timed("solve_g_system", logger=_logger, r=r, order=order):
        passes = 0
        while True:
            passes += 1
            changed = False
            for m in range(order + 1):
                for key in keys:
                    value = 1 if m == 0 and key == (0, 0) else 0
                    if m >= 1:
                        for left, right in products[key]:
                            value += _convolution_at(coefficients[left], coefficients[right], m - 1)
                    for shift, other in linears[key]:
                        if m - shift >= 0:
                            value += coefficients[other][m - shift]
                    if coefficients[key][m] != value:
                        coefficients[key][m] = value
                        changed = True
            _logger.debug(
                "g-system pass finished", r=r, order=order, passes=passes, changed=changed
            )
            if not changed:
                break
            if passes >= max_passes:
                raise NoConvergenceError(r, passes)

    return GTable(
        r=r,
        entries={
            key: TruncatedSeries(tuple(Fraction(c) for c in coefficients[key])) for key in keys
        },
    )


def _times_x_power(series: TruncatedSeries, power: int) -> TruncatedSeries:
    """x^power * series, kept at the order of series."""
    return series.shift(power).truncate(series.order)


def g_system_right_hand_side(table: GTable, key: Key) -> TruncatedSeries:
    """Right-hand side of the equation for entry key, evaluated on table."""
    r = table.r
    i, j = key
    order = table.order
    result = TruncatedSeries.constant(1 if key == (0, 0) else 0, order)
    for left, right in _product_terms(r, i, j):
        result = result + _times_x_power(table[left] * table[right], 1)
    for shift, other in _linear_terms(i, j):
        result = result + _times_x_power(table[other], shift)
    return result


def g_system_residuals(table: GTable) -> dict[Key, TruncatedSeries]:
    """
    Right-hand side minus entry for every equation, to the table's order.

    A solution returned by solve_g_system has all-zero residuals.
    """
    return {
        key: g_system_right_hand_side(table, key) - table[key].truncate(table.order)
        for key in table
    }
