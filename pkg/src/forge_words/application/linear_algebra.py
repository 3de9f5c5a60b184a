"""
Linear algebra - Exact nullspaces over the rationals.

Row reduction is delegated to sympy's DomainMatrix over QQ; the basis
is read off the reduced echelon form, one vector per free column.
"""
from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from forge_words.infrastructure.logging import LogService

_logger = LogService(__name__)

Scalar = int | Fraction


def _to_domain_matrix(rows: Sequence[Sequence[Scalar]], n_cols: int) -> DomainMatrix:
    converted = []
    for row in rows:
        if len(row) != n_cols:
            raise ValueError(f"row of length {len(row)} in a system with {n_cols} unknowns")
        converted.append([QQ(Fraction(v).numerator, Fraction(v).denominator) for v in row])
    return DomainMatrix(converted, (len(converted), n_cols), QQ)


def _reduced(
    rows: Sequence[Sequence[Scalar]], n_cols: int
) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form as Fractions, plus pivot columns."""
    if not rows:
        return [], []
    echelon, pivots = _to_domain_matrix(rows, n_cols).rref()
    matrix = echelon.to_Matrix()
    reduced = [
        [Fraction(int(matrix[i, j].p), int(matrix[i, j].q)) for j in range(n_cols)]
        for i in range(len(pivots))
    ]
    return reduced, list(pivots)


def nullspace(rows: Sequence[Sequence[Scalar]], n_cols: int) -> list[list[Fraction]]:
    """
    Basis of {v : rows * v = 0}.

    Args:
        rows: Coefficient rows, each of length n_cols
        n_cols: Number of unknowns

    Returns:
        One basis vector per free column, with a 1 in that column; empty when only v = 0 solves
    """
    reduced, pivots = _reduced(rows, n_cols)
    pivot_set = set(pivots)
    basis: list[list[Fraction]] = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        vector = [Fraction(0)] * n_cols
        vector[free] = Fraction(1)
        for row, pivot in zip(reduced, pivots):
            vector[pivot] = -row[free]
        basis.append(vector)
    _logger.debug("Nullspace computed", rows=len(rows), unknowns=n_cols, nullity=len(basis))
    return basis


def primitive_integer_vector(vector: Sequence[Scalar]) -> list[int]:
    """
    Scale to coprime integers, keeping the direction (sign untouched).

    The zero vector maps to itself.
    """
    fractions = [Fraction(v) for v in vector]
    denominator = reduce(lcm, (f.denominator for f in fractions), 1)
    integers = [int(f * denominator) for f in fractions]
    content = reduce(gcd, integers, 0)
    if content == 0:
        return integers
    return [value // content for value in integers]
