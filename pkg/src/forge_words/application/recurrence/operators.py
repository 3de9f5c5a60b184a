"""
Operators - Applying P-recursive operators to sequences and extending sequences with them.
"""
from __future__ import annotations

from forge_words.domain import LeadingCoefficientZeroError, NonIntegerStepError
from forge_words.domain.value_objects import IntegerSequence, RecurrenceOperator
from forge_words.infrastructure.logging import LogService

_logger = LogService(__name__)


def _residual_at(op: RecurrenceOperator, values: tuple[int, ...] | list[int], n: int) -> int:
    return sum(op.evaluate(k, n) * values[n + k] for k in range(op.order + 1))


def apply_operator(op: RecurrenceOperator, seq: IntegerSequence) -> IntegerSequence:
    """
    Residuals r(n) = sum_k p_k(n) seq(n+k) for every n with n + ord inside seq.

    op annihilates seq exactly when every residual is zero.
    """
    if len(seq) <= op.order:
        raise ValueError(f"sequence of length {len(seq)} too short for order {op.order}")
    values = seq.values
    residuals = [_residual_at(op, values, n) for n in range(len(seq) - op.order)]
    label = f"residual({seq.label})" if seq.label else "residual"
    return IntegerSequence.of(residuals, label=label)


def annihilates(op: RecurrenceOperator, seq: IntegerSequence) -> bool:
    return apply_operator(op, seq).is_zero()


def extend_sequence(
    op: RecurrenceOperator, seed: IntegerSequence, upto: int
) -> IntegerSequence:
    """
    Extend seed through index upto by solving for the highest shift.

    Args:
        op: Operator the sequence satisfies
        seed: Initial terms (at least op.order of them)
        upto: Last index of the result

    Raises:
        LeadingCoefficientZeroError: If p_ord(n) = 0 where a term must be solved for
        NonIntegerStepError: If a solved term is not an integer
    """
    order = op.order
    if len(seed) < order:
        raise ValueError(f"seed of length {len(seed)} too short for order {order}")
    values = list(seed.values[: upto + 1])

    with LogService.timed(
        "extend_sequence", logger=_logger, order=order, upto=upto, seed=len(seed)
    ):
        while len(values) <= upto:
            n = len(values) - order
            leading = op.evaluate(order, n)
            if leading == 0:
                raise LeadingCoefficientZeroError(n)
            lower = sum(op.evaluate(k, n) * values[n + k] for k in range(order))
            term, remainder = divmod(-lower, leading)
            if remainder:
                raise NonIntegerStepError(n)
            values.append(term)

    return IntegerSequence.of(values, label=seed.label)


def operators_equivalent(
    op1: RecurrenceOperator,
    op2: RecurrenceOperator,
    seq: IntegerSequence,
    extra: int = 100,
) -> bool:
    """
    Cross-annihilation: each operator annihilates the other's extension of seq.

    Both extensions run extra terms past the end of seq.
    """
    upto = len(seq) - 1 + extra
    first = extend_sequence(op1, seq, upto)
    second = extend_sequence(op2, seq, upto)
    equivalent = annihilates(op2, first) and annihilates(op1, second)
    _logger.debug(
        "Operators compared",
        order_1=op1.order,
        order_2=op2.order,
        upto=upto,
        equivalent=equivalent,
    )
    return equivalent
