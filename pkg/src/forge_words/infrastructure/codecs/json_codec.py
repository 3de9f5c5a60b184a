"""
JSON codec - Domain objects to and from their wire documents.

Output is deterministic: keys sorted, two-space indentation.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from pydantic import BaseModel, ValidationError

from forge_words.domain import FixtureFormatError, InvalidOperatorError
from forge_words.domain.value_objects import (
    BivariatePolynomial,
    RecurrenceOperator,
    TruncatedSeries,
)
from forge_words.infrastructure.codecs.documents import (
    OperatorDocument,
    PolynomialDocument,
    SeriesDocument,
    SeriesKind,
)


def dumps(data: Any) -> str:
    """Deterministic JSON text."""
    return json.dumps(data, sort_keys=True, indent=2)


def _validate(model: type[BaseModel], kind: str, data: Any) -> Any:
    try:
        if isinstance(data, str | bytes):
            return model.model_validate_json(data)
        return model.model_validate(data)
    except ValidationError as e:
        raise FixtureFormatError(kind, str(e)) from e


def encode_series(series: TruncatedSeries, r: int, kind: SeriesKind = "f") -> dict[str, Any]:
    return SeriesDocument(
        r=r,
        kind=kind,
        order=series.order,
        coeffs=[str(c) for c in series.coefficients],
    ).model_dump()


def decode_series(data: Any) -> tuple[TruncatedSeries, int, str]:
    """
    Returns:
        (series, r, kind)

    Raises:
        FixtureFormatError: If data is not a valid series document
    """
    document: SeriesDocument = _validate(SeriesDocument, "series", data)
    series = TruncatedSeries(tuple(Fraction(c) for c in document.coeffs))
    return series, document.r, document.kind


def encode_polynomial(p: BivariatePolynomial) -> dict[str, Any]:
    return PolynomialDocument(
        deg_x=max(p.deg_x, 0),
        deg_y=max(p.deg_y, 0),
        coeffs={f"{a},{b}": str(c) for (a, b), c in p.terms},
    ).model_dump()


def decode_polynomial(data: Any) -> BivariatePolynomial:
    document: PolynomialDocument = _validate(PolynomialDocument, "polynomial", data)
    return BivariatePolynomial.from_terms(document.terms())


def encode_operator(op: RecurrenceOperator) -> dict[str, Any]:
    return OperatorDocument(
        order=op.order,
        polys=[[str(c) for c in poly] for poly in op.polys],
    ).model_dump()


def decode_operator(data: Any) -> RecurrenceOperator:
    document: OperatorDocument = _validate(OperatorDocument, "operator", data)
    try:
        return RecurrenceOperator.from_polynomials(document.integer_polys())
    except InvalidOperatorError as e:
        raise FixtureFormatError("operator", e.reason) from e
