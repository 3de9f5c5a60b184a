"""Tests for algebraic equations of series."""
from math import comb

import pytest

from forge_words.application.algebraic import (
    degree_profile,
    eval_at_series,
    guess_algebraic,
    normalize_polynomial,
)
from forge_words.application.series import compute_f
from forge_words.domain import InsufficientTermsError
from forge_words.domain.value_objects import BivariatePolynomial, TruncatedSeries
from forge_words.infrastructure.fixtures import load_quartic

# 1 - F + x F^2
CATALAN_EQUATION = BivariatePolynomial.from_terms({(0, 0): 1, (0, 1): -1, (1, 2): 1})


def catalan_series(n_terms):
    return TruncatedSeries.from_coefficients(comb(2 * n, n) // (n + 1) for n in range(n_terms))


class TestBivariatePolynomial:
    """Tests for BivariatePolynomial."""

    def test_zero_terms_dropped(self):
        p = BivariatePolynomial.from_terms({(0, 0): 0, (1, 1): 2})
        assert p.terms == (((1, 1), 2),)

    def test_degree_profile(self):
        assert degree_profile(CATALAN_EQUATION) == (1, 2)
        assert BivariatePolynomial(()).degree_profile() == (-1, -1)

    def test_y_coefficient(self):
        assert CATALAN_EQUATION.y_coefficient(2) == [0, 1]

    def test_from_grid(self):
        p = BivariatePolynomial.from_grid([[1, -1, 0], [0, 0, 1]])
        assert p == CATALAN_EQUATION

    def test_normalize_divides_content_and_fixes_sign(self):
        p = BivariatePolynomial.from_terms({(0, 1): -4, (2, 0): 6})
        assert normalize_polynomial(p).as_dict() == {(0, 1): 2, (2, 0): -3}

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            BivariatePolynomial.from_terms({(-1, 0): 1})


class TestEvalAtSeries:
    """Tests for eval_at_series."""

    def test_catalan_equation_vanishes(self):
        assert eval_at_series(CATALAN_EQUATION, catalan_series(30)).is_zero()

    def test_wrong_series_does_not_vanish(self):
        residual = eval_at_series(CATALAN_EQUATION, TruncatedSeries.geometric(10))
        assert not residual.is_zero()

    def test_result_keeps_series_order(self):
        assert eval_at_series(CATALAN_EQUATION, catalan_series(12)).order == 11

    def test_quartic_fixture_annihilates_f2(self):
        assert eval_at_series(load_quartic(), compute_f(2, 41)).is_zero()


class TestGuessAlgebraic:
    """Tests for guess_algebraic."""

    def test_recovers_catalan_equation(self):
        assert guess_algebraic(catalan_series(40), 2, 2) == CATALAN_EQUATION

    def test_guessed_equation_is_minimal(self):
        """A larger budget still returns the smallest equation."""
        guessed = guess_algebraic(catalan_series(60), 4, 3)
        assert guessed is not None
        assert guessed.degree_profile() == (1, 2)

    def test_rational_series(self):
        """1/(1 - x) satisfies (1 - x) F - 1 = 0."""
        guessed = guess_algebraic(TruncatedSeries.geometric(30), 1, 1)
        expected = BivariatePolynomial.from_terms({(0, 0): -1, (0, 1): 1, (1, 1): -1})
        assert guessed == expected.normalized()

    def test_none_within_budget(self):
        """Catalan numbers are not rational."""
        assert guess_algebraic(catalan_series(40), 3, 1) is None

    def test_insufficient_terms(self):
        with pytest.raises(InsufficientTermsError) as exc_info:
            guess_algebraic(catalan_series(10), 6, 4)
        assert exc_info.value.required == 45
        assert exc_info.value.available == 9
