"""
RecurrenceOperator - Sum_k p_k(n) N^k with integer polynomial coefficients.

Acts on sequences by shift: (Sum_k p_k(n) N^k) a(n) = Sum_k p_k(n) a(n+k).
"""
from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

from forge_words.domain.exceptions import InvalidOperatorError


def _strip(coeffs: Sequence[int]) -> tuple[int, ...]:
    values = [int(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class RecurrenceOperator:
    """
    P-recursive operator.

    Attributes:
        polys: polys[k] holds the coefficients of p_k(n), ascending in n

    Usage:
        # (4n^2 + 2n) - (n^2 + 2n - 8) N, i.e. 2n(2n+1) - (n+4)(n-2) N
        op = RecurrenceOperator.from_polynomials([[0, 2, 4], [8, -2, -1]])
        op.order          # 1
        op.evaluate(1, 3) # p_1(3) = -7
    """

    polys: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        polys = tuple(_strip(p) for p in self.polys)
        if not polys or not polys[-1]:
            raise InvalidOperatorError("leading polynomial p_ord is identically zero")
        object.__setattr__(self, "polys", polys)

    @classmethod
    def from_polynomials(cls, polys: Sequence[Sequence[int]]) -> RecurrenceOperator:
        return cls(tuple(tuple(p) for p in polys))

    @property
    def order(self) -> int:
        return len(self.polys) - 1

    @property
    def degree(self) -> int:
        """Largest polynomial degree among the p_k."""
        return max(len(p) for p in self.polys) - 1

    def evaluate(self, k: int, n: int) -> int:
        """p_k(n) by Horner's rule."""
        value = 0
        for c in reversed(self.polys[k]):
            value = value * n + c
        return value

    def normalized(self) -> RecurrenceOperator:
        """Content 1, leading coefficient of p_ord positive."""
        content = 0
        for poly in self.polys:
            for c in poly:
                content = math.gcd(content, c)
        sign = 1 if self.polys[-1][-1] > 0 else -1
        return RecurrenceOperator(
            tuple(tuple(sign * (c // content) for c in poly) for poly in self.polys)
        )

    def __str__(self) -> str:
        def poly_str(poly: tuple[int, ...]) -> str:
            terms = []
            for d, c in enumerate(poly):
                if c:
                    power = "" if d == 0 else ("n" if d == 1 else f"n^{d}")
                    terms.append(f"{c}{'*' if power else ''}{power}")
            return " + ".join(terms) if terms else "0"

        parts = []
        for k, poly in enumerate(self.polys):
            shift = "" if k == 0 else ("N" if k == 1 else f"N^{k}")
            parts.append(f"({poly_str(poly)}){shift}")
        return " + ".join(parts)
