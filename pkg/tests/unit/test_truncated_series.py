"""Tests for TruncatedSeries arithmetic."""
from fractions import Fraction

import pytest

from forge_words.domain import (
    NonzeroConstantTermError,
    StrayCoefficientError,
    TruncationMismatchError,
)
from forge_words.domain.value_objects import (
    TruncatedSeries,
    decimate,
    series_add,
    series_mul,
    series_shift,
)


def s(*coefficients):
    return TruncatedSeries.from_coefficients(coefficients)


class TestConstructors:
    """Tests for TruncatedSeries constructors."""

    def test_from_coefficients_pads_to_order(self):
        assert s(1, 2).coefficients == (1, 2)
        assert TruncatedSeries.from_coefficients([1], order=2).coefficients == (1, 0, 0)

    def test_from_coefficients_cuts_to_order(self):
        assert TruncatedSeries.from_coefficients([1, 2, 3], order=1).order == 1

    def test_rational_strings_accepted(self):
        assert TruncatedSeries.from_coefficients(["1/2", "3"]).coefficients == (Fraction(1, 2), 3)

    def test_named_series(self):
        assert TruncatedSeries.zero(2).is_zero()
        assert TruncatedSeries.one(2).coefficients == (1, 0, 0)
        assert TruncatedSeries.x(2).coefficients == (0, 1, 0)
        assert TruncatedSeries.geometric(3).coefficients == (1, 1, 1, 1)
        assert TruncatedSeries.monomial(5, 2).is_zero()

    def test_empty_series(self):
        empty = TruncatedSeries(())
        assert empty.order == -1
        assert str(empty) == "0 + O(x^0)"


class TestAccessors:
    """Tests for coefficient access and inspection."""

    def test_coefficient_beyond_order_raises(self):
        with pytest.raises(TruncationMismatchError) as exc_info:
            s(1, 2)[5]
        assert exc_info.value.required == 5

    def test_negative_index_is_zero(self):
        assert s(1, 2).coefficient(-1) == 0

    def test_truncate_never_extends(self):
        series = s(1, 2, 3)
        assert series.truncate(1).coefficients == (1, 2)
        assert series.truncate(10) is series

    def test_support(self):
        assert s(0, 1, 0, 3).support() == [1, 3]

    def test_integer_coefficients(self):
        assert s(1, 2).integer_coefficients() == [1, 2]
        with pytest.raises(ValueError):
            s(Fraction(1, 2)).integer_coefficients()

    def test_str(self):
        assert str(s(1, 1, 0, 3)) == "1 + x + 3*x^3 + O(x^4)"


class TestArithmetic:
    """Tests for series arithmetic."""

    def test_add_truncates_to_smaller_order(self):
        assert series_add(s(1, 1, 1), s(1, 1)).coefficients == (2, 2)

    def test_sub_and_neg(self):
        assert (s(3, 2) - s(1, 1)).coefficients == (2, 1)
        assert (-s(1, -2)).coefficients == (-1, 2)

    def test_scale(self):
        assert (s(1, 2) * Fraction(1, 2)).coefficients == (Fraction(1, 2), 1)
        assert (3 * s(1, 2)).coefficients == (3, 6)

    def test_mul(self):
        """(1 + x)(1 - x) = 1 - x^2."""
        assert series_mul(s(1, 1, 0), s(1, -1, 0)).coefficients == (1, 0, -1)

    def test_mul_rational(self):
        half = s(Fraction(1, 2), 1)
        assert (half * half).coefficients == (Fraction(1, 4), 1)

    def test_geometric_inverse(self):
        product = TruncatedSeries.geometric(5) * s(1, -1, 0, 0, 0, 0)
        assert product == TruncatedSeries.one(5)

    def test_catalan_equation(self):
        """C = 1 + x C^2 holds for the Catalan numbers."""
        c = s(1, 1, 2, 5, 14, 42, 132)
        assert TruncatedSeries.one(6) + (c * c).shift(1).truncate(6) == c

    def test_shift(self):
        assert series_shift(s(1, 2), 2).coefficients == (0, 0, 1, 2)
        with pytest.raises(ValueError):
            series_shift(s(1), -1)

    def test_div_x(self):
        assert s(0, 1, 0, 3).div_x().coefficients == (1, 0, 3)

    def test_div_x_requires_zero_constant(self):
        with pytest.raises(NonzeroConstantTermError):
            s(1, 1).div_x()


class TestDecimate:
    """Tests for decimate."""

    def test_keeps_every_rth_coefficient(self):
        assert decimate(s(1, 0, 6, 0, 43), 2).coefficients == (1, 6, 43)

    def test_stray_coefficient_raises(self):
        with pytest.raises(StrayCoefficientError) as exc_info:
            decimate(s(1, 0, 6, 5), 2)
        assert exc_info.value.index == 3

    def test_r_one_is_identity(self):
        series = s(1, 2, 3)
        assert series.decimate(1) == series
