"""
Algebraic guessing - Find P(x, y) with P(x, F(x)) = 0 from series data.

The ansatz sum_{a<=dx, b<=dy} c_ab x^a F^b is linear in the unknowns
c_ab; each coefficient of x^k in it gives one homogeneous equation. A
candidate is fitted on the first (dx+1)(dy+1) equations, confirmed on a
guard window, and finally checked against every available coefficient.
"""
from __future__ import annotations

from fractions import Fraction

from forge_words.application.linear_algebra import nullspace, primitive_integer_vector
from forge_words.domain import InsufficientTermsError
from forge_words.domain.value_objects import BivariatePolynomial, TruncatedSeries
from forge_words.infrastructure.logging import LogService

_logger = LogService(__name__)

DEFAULT_GUARD = 10


def eval_at_series(p: BivariatePolynomial, f: TruncatedSeries) -> TruncatedSeries:
    """
    P(x, F(x)) truncated to F's order.

    Powers of F come from repeated series multiplication.
    """
    order = f.order
    result = TruncatedSeries.zero(order)
    if p.is_zero() or order < 0:
        return result
    power = TruncatedSeries.one(order)
    for b in range(p.deg_y + 1):
        if b:
            power = power * f
        row = p.y_coefficient(b)
        if not any(row):
            continue
        x_poly = TruncatedSeries.from_coefficients(row, order)
        result = result + x_poly * power
    return result


def degree_profile(p: BivariatePolynomial) -> tuple[int, int]:
    """(deg_x, deg_y) after trimming zero rows and columns."""
    return p.degree_profile()


def normalize_polynomial(p: BivariatePolynomial) -> BivariatePolynomial:
    """Content 1, lexicographically first coefficient positive."""
    return p.normalized()


def _powers(f: TruncatedSeries, deg_y: int) -> list[list[Fraction]]:
    powers = [list(TruncatedSeries.one(f.order).coefficients)]
    current = TruncatedSeries.one(f.order)
    for _ in range(deg_y):
        current = current * f
        powers.append(list(current.coefficients))
    return powers


def _equation(powers: list[list[Fraction]], k: int, dx: int, dy: int) -> list[Fraction]:
    """Coefficient of x^k in the ansatz, as a row over unknowns ordered (b, a)."""
    return [
        powers[b][k - a] if k - a >= 0 else Fraction(0)
        for b in range(dy + 1)
        for a in range(dx + 1)
    ]


def _to_polynomial(vector: list[Fraction], dx: int, dy: int) -> BivariatePolynomial:
    integers = primitive_integer_vector(vector)
    terms = {
        (a, b): integers[b * (dx + 1) + a]
        for b in range(dy + 1)
        for a in range(dx + 1)
    }
    return BivariatePolynomial.from_terms(terms)


def _solve_candidate(
    powers: list[list[Fraction]], order: int, dx: int, dy: int, guard: int
) -> BivariatePolynomial | None:
    unknowns = (dx + 1) * (dy + 1)
    fit = [_equation(powers, k, dx, dy) for k in range(unknowns)]
    basis = nullspace(fit, unknowns)
    if len(basis) > 1:
        guarded = fit + [_equation(powers, k, dx, dy) for k in range(unknowns, unknowns + guard)]
        basis = nullspace(guarded, unknowns)
        if len(basis) > 1:
            _logger.debug(
                "Candidate rejected, nullspace not one-dimensional",
                deg_x=dx,
                deg_y=dy,
                nullity=len(basis),
            )
            return None
    if not basis:
        return None

    vector = basis[0]
    for k in range(unknowns, order + 1):
        row = _equation(powers, k, dx, dy)
        if sum(c * v for c, v in zip(row, vector) if v) != 0:
            _logger.debug("Candidate failed verification", deg_x=dx, deg_y=dy, coefficient=k)
            return None
    return _to_polynomial(vector, dx, dy).normalized()


def guess_algebraic(
    f: TruncatedSeries,
    deg_x: int,
    deg_y: int,
    guard: int = DEFAULT_GUARD,
) -> BivariatePolynomial | None:
    """
    Minimal algebraic equation of F within the degree budget.

    Sweeps deg_y from 1 upward and, inside, deg_x from 0 upward; the first
    candidate that survives the guard window and every further available
    coefficient is returned.

    Args:
        f: Series data
        deg_x: Largest x-degree tried
        deg_y: Largest y-degree tried
        guard: Held-out coefficients a candidate must also annihilate

    Returns:
        Normalized polynomial, or None when nothing fits the budget

    Raises:
        InsufficientTermsError: If F's order is below (deg_x+1)(deg_y+1) + guard
    """
    required = (deg_x + 1) * (deg_y + 1) + guard
    if f.order < required:
        raise InsufficientTermsError(required=required, available=f.order)

    powers = _powers(f, deg_y)
    with LogService.timed(
        "guess_algebraic", logger=_logger, deg_x=deg_x, deg_y=deg_y, order=f.order
    ):
        for dy in range(1, deg_y + 1):
            for dx in range(deg_x + 1):
                candidate = _solve_candidate(powers, f.order, dx, dy, guard)
                if candidate is not None:
                    _logger.info("Algebraic equation found", deg_x=dx, deg_y=dy, order=f.order)
                    return candidate
    _logger.info("No algebraic equation within budget", deg_x=deg_x, deg_y=deg_y)
    return None
