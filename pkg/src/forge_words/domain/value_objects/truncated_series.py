"""
TruncatedSeries - Power series with exact rational coefficients.

A series known to order N carries the coefficients of x^0 .. x^N.
Coefficients beyond N are unknown, never assumed zero, so every
operation truncates to the smallest order it can vouch for.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction

from forge_words.domain.exceptions import (
    NonzeroConstantTermError,
    StrayCoefficientError,
    TruncationMismatchError,
)

Scalar = int | Fraction


@dataclass(frozen=True)
class TruncatedSeries:
    """
    Immutable truncated power series over the rationals.

    Attributes:
        coefficients: Coefficients of x^0 .. x^order

    Usage:
        a = TruncatedSeries.from_coefficients([1, 1])        # 1 + x, order 1
        b = TruncatedSeries.from_coefficients([1, -1])       # 1 - x, order 1
        (a * b).coefficients                                 # (1, 0)
        TruncatedSeries.from_coefficients([0, 1, 0, 3]).div_x()  # 1 + 3x^2
    """

    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "coefficients", tuple(Fraction(c) for c in self.coefficients)
        )

    # ----------------------------------------
    # Constructors
    # ----------------------------------------

    @classmethod
    def from_coefficients(
        cls, coefficients: Iterable[Scalar | str], order: int | None = None
    ) -> TruncatedSeries:
        """
        Build from leading coefficients.

        Args:
            coefficients: Coefficients of x^0, x^1, ...
            order: Known order; shorter input is padded with zeros, longer is cut
        """
        values = [Fraction(c) for c in coefficients]
        if order is None:
            return cls(tuple(values))
        values = values[: order + 1]
        values.extend(Fraction(0) for _ in range(order + 1 - len(values)))
        return cls(tuple(values))

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls((Fraction(0),) * (order + 1))

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls.constant(1, order)

    @classmethod
    def constant(cls, value: Scalar, order: int) -> TruncatedSeries:
        if order < 0:
            return cls(())
        return cls((Fraction(value),) + (Fraction(0),) * order)

    @classmethod
    def x(cls, order: int) -> TruncatedSeries:
        """The series x itself."""
        return cls.monomial(1, order)

    @classmethod
    def monomial(cls, exponent: int, order: int) -> TruncatedSeries:
        values = [Fraction(0)] * (order + 1)
        if exponent <= order:
            values[exponent] = Fraction(1)
        return cls(tuple(values))

    @classmethod
    def geometric(cls, order: int) -> TruncatedSeries:
        """1/(1 - x)."""
        return cls((Fraction(1),) * (order + 1))

    # ----------------------------------------
    # Accessors
    # ----------------------------------------

    @property
    def order(self) -> int:
        """Index of the last known coefficient (-1 when nothing is known)."""
        return len(self.coefficients) - 1

    def coefficient(self, index: int) -> Fraction:
        """
        Coefficient of x^index.

        Raises:
            TruncationMismatchError: If index lies beyond the known order
        """
        if index < 0:
            return Fraction(0)
        if index > self.order:
            raise TruncationMismatchError(required=index, available=self.order)
        return self.coefficients[index]

    def truncate(self, order: int) -> TruncatedSeries:
        """Forget coefficients above order (never extends)."""
        if order >= self.order:
            return self
        return TruncatedSeries(self.coefficients[: max(order, -1) + 1])

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def support(self) -> list[int]:
        """Exponents carrying a nonzero coefficient."""
        return [k for k, c in enumerate(self.coefficients) if c]

    def integer_coefficients(self) -> list[int]:
        """
        Coefficients as Python ints.

        Raises:
            ValueError: If some coefficient is not an integer
        """
        if not self.is_integral():
            raise ValueError("series has non-integral coefficients")
        return [c.numerator for c in self.coefficients]

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coefficients)

    def __getitem__(self, index: int) -> Fraction:
        return self.coefficient(index)

    # ----------------------------------------
    # Arithmetic
    # ----------------------------------------

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_add(self, other)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_sub(self, other)

    def __neg__(self) -> TruncatedSeries:
        return series_scale(self, -1)

    def __mul__(self, other: TruncatedSeries | Scalar) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return series_scale(self, other)

    def __rmul__(self, other: Scalar) -> TruncatedSeries:
        return series_scale(self, other)

    def shift(self, k: int) -> TruncatedSeries:
        return series_shift(self, k)

    def div_x(self) -> TruncatedSeries:
        return series_div_x(self)

    def decimate(self, r: int) -> TruncatedSeries:
        return decimate(self, r)

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coefficients):
            if not c:
                continue
            power = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if k and c == 1:
                terms.append(power)
            else:
                terms.append(f"{c}{'*' if power else ''}{power}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(x^{self.order + 1})"


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Sum truncated to min(order_a, order_b)."""
    order = min(a.order, b.order)
    return TruncatedSeries(
        tuple(a.coefficients[k] + b.coefficients[k] for k in range(order + 1))
    )


def series_sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Difference truncated to min(order_a, order_b)."""
    order = min(a.order, b.order)
    return TruncatedSeries(
        tuple(a.coefficients[k] - b.coefficients[k] for k in range(order + 1))
    )


def series_scale(a: TruncatedSeries, factor: Scalar) -> TruncatedSeries:
    """Multiply every coefficient by an exact scalar."""
    factor = Fraction(factor)
    return TruncatedSeries(tuple(factor * c for c in a.coefficients))


def series_shift(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """Multiply by x^k; the known order grows by k."""
    if k < 0:
        raise ValueError("use series_div_x to shift down")
    if a.order < 0:
        return a
    return TruncatedSeries((Fraction(0),) * k + a.coefficients)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """
    Cauchy product truncated to min(order_a, order_b).

    Quadratic convolution; zero coefficients of the left factor are
    skipped, which halves the work on the parity-sparse weight enumerators.
    """
    order = min(a.order, b.order)
    if order < 0:
        return TruncatedSeries(())
    if a.is_integral() and b.is_integral():
        return TruncatedSeries(
            tuple(
                Fraction(c)
                for c in _int_convolution(
                    [c.numerator for c in a.coefficients[: order + 1]],
                    [c.numerator for c in b.coefficients[: order + 1]],
                )
            )
        )
    right = b.coefficients
    nonzero = [(k, c) for k, c in enumerate(a.coefficients[: order + 1]) if c]
    result: list[Fraction] = []
    for m in range(order + 1):
        total = Fraction(0)
        for k, c in nonzero:
            if k > m:
                break
            other = right[m - k]
            if other:
                total += c * other
        result.append(total)
    return TruncatedSeries(tuple(result))


def _int_convolution(left: list[int], right: list[int]) -> list[int]:
    """Truncated Cauchy product of equal-length integer lists."""
    result = [0] * len(left)
    nonzero = [(k, c) for k, c in enumerate(left) if c]
    for m in range(len(left)):
        total = 0
        for k, c in nonzero:
            if k > m:
                break
            other = right[m - k]
            if other:
                total += c * other
        result[m] = total
    return result


def series_div_x(a: TruncatedSeries) -> TruncatedSeries:
    """
    Divide by x, shifting every coefficient down one index.

    Raises:
        NonzeroConstantTermError: If a(0) != 0
    """
    if a.order < 0:
        return a
    if a.coefficients[0] != 0:
        raise NonzeroConstantTermError(a.coefficients[0])
    return TruncatedSeries(a.coefficients[1:])


def decimate(a: TruncatedSeries, r: int) -> TruncatedSeries:
    """
    Keep every r-th coefficient: result[n] = a[r*n] (the substitution x -> x^(1/r)).

    Raises:
        StrayCoefficientError: If a nonzero coefficient sits off the multiples of r
    """
    if r < 1:
        raise ValueError("r must be positive")
    for index, c in enumerate(a.coefficients):
        if c and index % r:
            raise StrayCoefficientError(index, r)
    if a.order < 0:
        return a
    return TruncatedSeries(a.coefficients[:: r])
