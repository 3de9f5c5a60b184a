"""Tests for recurrence operators, extension and recurrence guessing."""
import math

import pytest

from forge_words.application.recurrence import (
    annihilates,
    apply_operator,
    extend_sequence,
    guess_recurrence,
    operators_equivalent,
)
from forge_words.application.sequences import a_r_sequence, catalan_sequence, noonan_sequence
from forge_words.domain import (
    InsufficientTermsError,
    InvalidOperatorError,
    LeadingCoefficientZeroError,
    NonIntegerStepError,
)
from forge_words.domain.value_objects import IntegerSequence, RecurrenceOperator
from forge_words.infrastructure.fixtures import load_operator

# (n + 2) C(n + 1) - (4n + 2) C(n) = 0
CATALAN_OPERATOR = RecurrenceOperator.from_polynomials([[-2, -4], [2, 1]])


class TestRecurrenceOperator:
    """Tests for RecurrenceOperator."""

    def test_order_and_degree(self):
        op = RecurrenceOperator.from_polynomials([[0, 2, 4], [8, -2, -1]])
        assert op.order == 1
        assert op.degree == 2

    def test_evaluate(self):
        op = RecurrenceOperator.from_polynomials([[0, 2, 4], [8, -2, -1]])
        assert op.evaluate(1, 3) == -7
        assert op.evaluate(0, 0) == 0

    def test_trailing_zeros_stripped(self):
        op = RecurrenceOperator.from_polynomials([[1, 0, 0], [2, 0]])
        assert op.polys == ((1,), (2,))

    def test_zero_leading_polynomial_rejected(self):
        with pytest.raises(InvalidOperatorError):
            RecurrenceOperator.from_polynomials([[1, 2], [0, 0]])

    def test_normalized(self):
        op = RecurrenceOperator.from_polynomials([[0, 2, 4], [8, -2, -1]]).normalized()
        assert op.polys == ((0, -2, -4), (-8, 2, 1))
        doubled = RecurrenceOperator.from_polynomials([[-4, -8], [4, 2]])
        assert doubled.normalized() == CATALAN_OPERATOR


class TestApplyOperator:
    """Tests for apply_operator and annihilates."""

    def test_catalan_annihilated(self):
        seq = catalan_sequence(30)
        residual = apply_operator(CATALAN_OPERATOR, seq)
        assert len(residual) == 29
        assert residual.is_zero()
        assert annihilates(CATALAN_OPERATOR, seq)

    def test_nonzero_residual(self):
        seq = IntegerSequence.of([1, 1, 1, 1])
        assert not annihilates(CATALAN_OPERATOR, seq)

    def test_r1_fixture_annihilates_a1(self):
        assert annihilates(load_operator(1), noonan_sequence(31))

    def test_r2_fixture_annihilates_a2(self):
        assert annihilates(load_operator(2), a_r_sequence(2, 41))

    def test_too_short(self):
        with pytest.raises(ValueError):
            apply_operator(load_operator(2), IntegerSequence.of([1, 2, 3]))


class TestExtendSequence:
    """Tests for extend_sequence."""

    def test_extends_catalan(self):
        extended = extend_sequence(CATALAN_OPERATOR, IntegerSequence.of([1, 1]), 8)
        assert extended.values == (1, 1, 2, 5, 14, 42, 132, 429, 1430)

    def test_extends_a2_from_fixture(self):
        seed = a_r_sequence(2, 30)
        extended = extend_sequence(load_operator(2), seed, 39)
        assert extended == a_r_sequence(2, 40)

    def test_seed_longer_than_target_is_cut(self):
        assert len(extend_sequence(CATALAN_OPERATOR, catalan_sequence(10), 4)) == 5

    def test_leading_coefficient_zero(self):
        """p_1(n) = -(n + 4)(n - 2) vanishes at n = 2."""
        with pytest.raises(LeadingCoefficientZeroError) as exc_info:
            extend_sequence(load_operator(1), IntegerSequence.of([0, 0]), 10)
        assert exc_info.value.n == 2

    def test_non_integer_step(self):
        op = RecurrenceOperator.from_polynomials([[1], [2]])
        with pytest.raises(NonIntegerStepError) as exc_info:
            extend_sequence(op, IntegerSequence.of([1]), 3)
        assert exc_info.value.n == 0


class TestOperatorsEquivalent:
    """Tests for operators_equivalent."""

    def test_left_multiple_is_equivalent(self):
        """(n + 1) times the Catalan operator annihilates the same sequence."""
        multiple = RecurrenceOperator.from_polynomials([[-2, -6, -4], [2, 3, 1]])
        assert operators_equivalent(CATALAN_OPERATOR, multiple, catalan_sequence(10), extra=50)

    def test_different_operators(self):
        powers_of_four = RecurrenceOperator.from_polynomials([[-4], [1]])
        assert not operators_equivalent(
            CATALAN_OPERATOR, powers_of_four, catalan_sequence(10), extra=20
        )


class TestGuessRecurrence:
    """Tests for guess_recurrence."""

    def test_catalan(self):
        assert guess_recurrence(catalan_sequence(40), 2, 4) == CATALAN_OPERATOR

    def test_a1_matches_fixture(self):
        guessed = guess_recurrence(noonan_sequence(40), 2, 4)
        assert guessed == load_operator(1).normalized()
        assert guessed.polys == ((0, -2, -4), (-8, 2, 1))

    def test_none_within_budget(self):
        """Factorials need a coefficient of degree 1."""
        seq = IntegerSequence.of(math.factorial(n) for n in range(40))
        assert guess_recurrence(seq, 1, 0, guard=10) is None

    def test_insufficient_terms(self):
        with pytest.raises(InsufficientTermsError) as exc_info:
            guess_recurrence(catalan_sequence(20), 2, 4)
        assert exc_info.value.required == 37

