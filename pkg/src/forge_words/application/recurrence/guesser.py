"""
Recurrence guessing - Find sum_k p_k(n) a(n+k) = 0 from sequence data.

Unknowns are the coefficients of the p_k; each index n gives one
homogeneous equation. Candidates follow the same fit, guard and
full-verification policy as algebraic guessing.
"""
from __future__ import annotations

from forge_words.application.linear_algebra import nullspace, primitive_integer_vector
from forge_words.domain import InsufficientTermsError
from forge_words.domain.value_objects import IntegerSequence, RecurrenceOperator
from forge_words.infrastructure.logging import LogService

_logger = LogService(__name__)

DEFAULT_GUARD = 20


def _equation(values: tuple[int, ...], n: int, order: int, degree: int) -> list[int]:
    """Row over unknowns ordered (k, d): coefficient of n^d in p_k times a(n+k)."""
    return [n**d * values[n + k] for k in range(order + 1) for d in range(degree + 1)]


def _to_operator(vector: list[int], order: int, degree: int) -> RecurrenceOperator | None:
    polys = [vector[k * (degree + 1) : (k + 1) * (degree + 1)] for k in range(order + 1)]
    if not any(polys[-1]):
        return None
    return RecurrenceOperator.from_polynomials(polys).normalized()


def _solve_candidate(
    values: tuple[int, ...], order: int, degree: int, guard: int
) -> RecurrenceOperator | None:
    unknowns = (order + 1) * (degree + 1)
    rows_available = len(values) - order
    fit = [_equation(values, n, order, degree) for n in range(min(unknowns, rows_available))]
    basis = nullspace(fit, unknowns)
    if len(basis) > 1:
        stop = min(unknowns + guard, rows_available)
        guarded = fit + [_equation(values, n, order, degree) for n in range(unknowns, stop)]
        basis = nullspace(guarded, unknowns)
        if len(basis) > 1:
            _logger.debug(
                "Candidate rejected, nullspace not one-dimensional",
                order=order,
                degree=degree,
                nullity=len(basis),
            )
            return None
    if not basis:
        return None

    vector = primitive_integer_vector(basis[0])
    for n in range(unknowns, rows_available):
        if sum(c * v for c, v in zip(_equation(values, n, order, degree), vector) if v):
            _logger.debug("Candidate failed verification", order=order, degree=degree, index=n)
            return None
    return _to_operator(vector, order, degree)


def guess_recurrence(
    seq: IntegerSequence,
    max_order: int,
    max_degree: int,
    guard: int = DEFAULT_GUARD,
) -> RecurrenceOperator | None:
    """
    Least (order, degree), in lexicographic order, whose operator annihilates seq.

    Args:
        seq: Sequence data
        max_order: Largest order tried
        max_degree: Largest polynomial degree tried
        guard: Held-out equations a candidate must also satisfy

    Returns:
        Normalized operator, or None when nothing fits the budget

    Raises:
        InsufficientTermsError: If seq has fewer than
            (max_order+1)(max_degree+1) + guard + max_order terms
    """
    required = (max_order + 1) * (max_degree + 1) + guard + max_order
    if len(seq) < required:
        raise InsufficientTermsError(required=required, available=len(seq))

    values = seq.values
    with LogService.timed(
        "guess_recurrence",
        logger=_logger,
        max_order=max_order,
        max_degree=max_degree,
        terms=len(seq),
    ):
        for order in range(1, max_order + 1):
            for degree in range(max_degree + 1):
                candidate = _solve_candidate(values, order, degree, guard)
                if candidate is not None:
                    _logger.info("Recurrence found", order=order, degree=degree, label=seq.label)
                    return candidate
    _logger.info(
        "No recurrence within budget",
        max_order=max_order,
        max_degree=max_degree,
        label=seq.label,
    )
    return None
