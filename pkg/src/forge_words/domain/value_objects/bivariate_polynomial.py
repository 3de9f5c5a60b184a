"""
BivariatePolynomial - P(x, y) with arbitrary-precision integer coefficients.

Represents an algebraic equation P(x, F(x)) = 0 for a series F.
Stored sparsely as sorted ((a, b), c) terms for x^a * y^b, zero terms
dropped, so equality is structural.
"""
from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import dataclass


@dataclass(frozen=True)
class BivariatePolynomial:
    """
    Sparse bivariate integer polynomial.

    Usage:
        # (1 - x) y - 1
        p = BivariatePolynomial.from_terms({(0, 1): 1, (1, 1): -1, (0, 0): -1})
        p.degree_profile()   # (1, 1)
        p.normalized()
    """

    terms: tuple[tuple[tuple[int, int], int], ...]

    def __post_init__(self) -> None:
        cleaned: dict[tuple[int, int], int] = {}
        for (a, b), c in self.terms:
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent in term x^{a} y^{b}")
            cleaned[(a, b)] = cleaned.get((a, b), 0) + int(c)
        object.__setattr__(
            self,
            "terms",
            tuple(sorted((key, c) for key, c in cleaned.items() if c != 0)),
        )

    @classmethod
    def from_terms(cls, terms: Mapping[tuple[int, int], int]) -> BivariatePolynomial:
        return cls(tuple(terms.items()))

    @classmethod
    def from_grid(cls, grid: list[list[int]]) -> BivariatePolynomial:
        """grid[a][b] is the coefficient of x^a y^b."""
        return cls(
            tuple(((a, b), c) for a, row in enumerate(grid) for b, c in enumerate(row))
        )

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.terms)

    def coefficient(self, a: int, b: int) -> int:
        return self.as_dict().get((a, b), 0)

    def y_coefficient(self, b: int) -> list[int]:
        """Coefficients (ascending in x) of y^b."""
        row = [0] * (self.deg_x + 1)
        for (a, bb), c in self.terms:
            if bb == b:
                row[a] = c
        return row

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def deg_x(self) -> int:
        return max((a for (a, _), _ in self.terms), default=-1)

    @property
    def deg_y(self) -> int:
        return max((b for (_, b), _ in self.terms), default=-1)

    def degree_profile(self) -> tuple[int, int]:
        """Actual (deg_x, deg_y)."""
        return (self.deg_x, self.deg_y)

    def normalized(self) -> BivariatePolynomial:
        """
        Divide by the content and fix the sign.

        The lexicographically first nonzero coefficient, in (a, b) order,
        is made positive.
        """
        if not self.terms:
            return self
        content = 0
        for _, c in self.terms:
            content = math.gcd(content, c)
        sign = 1 if self.terms[0][1] > 0 else -1
        return BivariatePolynomial(
            tuple((key, sign * (c // content)) for key, c in self.terms)
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in self.terms:
            factors = [str(c)]
            if a:
                factors.append("x" if a == 1 else f"x^{a}")
            if b:
                factors.append("F" if b == 1 else f"F^{b}")
            parts.append("*".join(factors))
        return " + ".join(parts)
