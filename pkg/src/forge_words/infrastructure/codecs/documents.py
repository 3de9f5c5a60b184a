"""
Wire documents - pydantic models of the JSON formats.

Series:      {"r": 2, "kind": "f", "order": 5, "coeffs": ["0", "0", "0", "12", "174", "2064"]}
Polynomial:  {"deg_x": 6, "deg_y": 4, "coeffs": {"a,b": "integer", ...}}
Operator:    {"order": 4, "polys": [["c0", "c1", ...], ...]}   (ascending in n)
Cache line:  {"list": [1, 2, 2], "count": 19}

Numbers travel as decimal strings so arbitrary precision survives transport.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

SeriesKind = Literal["f", "h", "g", "avoider"]


def _parse_integer(text: str) -> int:
    stripped = text.strip()
    if stripped != text or not stripped.lstrip("-").isdigit():
        raise ValueError(f"'{text}' is not an integer string")
    return int(stripped)


class SeriesDocument(BaseModel):
    """A truncated series; coeffs has order + 1 entries."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    r: int = Field(ge=1)
    kind: SeriesKind
    order: int = Field(ge=-1)
    coeffs: list[str]

    @field_validator("coeffs")
    @classmethod
    def _rational_strings(cls, coeffs: list[str]) -> list[str]:
        for text in coeffs:
            try:
                Fraction(text)
            except (ValueError, ZeroDivisionError) as e:
                raise ValueError(f"'{text}' is not a rational number") from e
        return coeffs

    @model_validator(mode="after")
    def _length_matches_order(self) -> SeriesDocument:
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"order {self.order} needs {self.order + 1} coefficients, got {len(self.coeffs)}"
            )
        return self


class PolynomialDocument(BaseModel):
    """A bivariate integer polynomial keyed by "a,b" for x^a y^b."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    deg_x: int = Field(ge=0)
    deg_y: int = Field(ge=0)
    coeffs: dict[str, str]

    @model_validator(mode="after")
    def _keys_within_degrees(self) -> PolynomialDocument:
        for key, value in self.coeffs.items():
            parts = key.split(",")
            if len(parts) != 2 or not all(part.isdigit() for part in parts):
                raise ValueError(f"key '{key}' is not of the form 'a,b'")
            a, b = int(parts[0]), int(parts[1])
            if a > self.deg_x or b > self.deg_y:
                raise ValueError(f"term x^{a} y^{b} exceeds degrees ({self.deg_x}, {self.deg_y})")
            _parse_integer(value)
        return self

    def terms(self) -> dict[tuple[int, int], int]:
        result: dict[tuple[int, int], int] = {}
        for key, value in self.coeffs.items():
            a, b = key.split(",")
            result[(int(a), int(b))] = _parse_integer(value)
        return result


class OperatorDocument(BaseModel):
    """A recurrence operator; polys[k] holds p_k ascending in n."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    order: int = Field(ge=0)
    polys: list[list[str]]

    @model_validator(mode="after")
    def _shape(self) -> OperatorDocument:
        if len(self.polys) != self.order + 1:
            raise ValueError(
                f"order {self.order} needs {self.order + 1} polynomials, got {len(self.polys)}"
            )
        for poly in self.polys:
            for value in poly:
                _parse_integer(value)
        return self

    def integer_polys(self) -> list[list[int]]:
        return [[_parse_integer(value) for value in poly] for poly in self.polys]


class CacheRecord(BaseModel):
    """One persisted avoider count under its canonical list."""

    model_config = ConfigDict(extra="forbid", frozen=True, populate_by_name=True)

    counts: list[int] = Field(alias="list")
    count: int = Field(ge=1)

    @field_validator("counts")
    @classmethod
    def _canonical(cls, counts: list[int]) -> list[int]:
        if any(c <= 0 for c in counts):
            raise ValueError("list entries must be positive (zeros are stripped)")
        if counts != sorted(counts):
            raise ValueError("list must be sorted ascending")
        return counts
