"""Tests for the exact nullspace solver."""
from fractions import Fraction

import pytest

from forge_words.application.linear_algebra import nullspace, primitive_integer_vector


class TestNullspace:
    """Tests for nullspace."""

    def test_rank_one_system(self):
        basis = nullspace([[1, 2, 3], [2, 4, 6]], 3)
        assert basis == [[-2, 1, 0], [-3, 0, 1]]

    def test_full_rank_has_trivial_nullspace(self):
        assert nullspace([[1, 0], [0, 1]], 2) == []

    def test_rational_entries(self):
        (vector,) = nullspace([[Fraction(1, 2), Fraction(1, 3)]], 2)
        assert vector == [Fraction(-2, 3), 1]

    def test_basis_vectors_solve_the_system(self):
        rows = [[1, -1, 0, 2], [0, 1, -1, 5]]
        for vector in nullspace(rows, 4):
            assert all(sum(a * v for a, v in zip(row, vector)) == 0 for row in rows)

    def test_no_rows(self):
        assert nullspace([], 2) == [[1, 0], [0, 1]]

    def test_row_length_checked(self):
        with pytest.raises(ValueError):
            nullspace([[1, 2]], 3)


class TestPrimitiveIntegerVector:
    """Tests for primitive_integer_vector."""

    def test_clears_denominators_and_content(self):
        assert primitive_integer_vector([Fraction(1, 2), Fraction(-1, 3)]) == [3, -2]
        assert primitive_integer_vector([4, 6, -8]) == [2, 3, -4]

    def test_sign_kept(self):
        assert primitive_integer_vector([-2, 4]) == [-1, 2]

    def test_zero_vector(self):
        assert primitive_integer_vector([0, 0]) == [0, 0]
