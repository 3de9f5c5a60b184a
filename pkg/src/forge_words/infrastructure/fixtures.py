"""
Fixtures - Loader for the checked-in reference objects.

    r2_quartic.json   algebraic equation of f_2
    r1_operator.json  recurrence of a_1
    r2_operator.json  recurrence of a_2
"""
from __future__ import annotations

import json
from importlib import resources
from typing import Any

from forge_words.domain import FixtureFormatError
from forge_words.domain.value_objects import BivariatePolynomial, RecurrenceOperator
from forge_words.infrastructure.codecs import decode_operator, decode_polynomial

FIXTURE_PACKAGE = "forge_words.fixtures"

OPERATOR_FIXTURES = {1: "r1_operator.json", 2: "r2_operator.json"}
QUARTIC_FIXTURE = "r2_quartic.json"


def read_fixture(name: str) -> Any:
    """
    Parsed JSON content of a checked-in fixture.

    Raises:
        FixtureFormatError: If the file is missing or not JSON
    """
    resource = resources.files(FIXTURE_PACKAGE).joinpath(name)
    try:
        return json.loads(resource.read_text(encoding="utf-8"))
    except FileNotFoundError as e:
        raise FixtureFormatError("fixture", f"{name} not found") from e
    except json.JSONDecodeError as e:
        raise FixtureFormatError("fixture", f"{name}: {e}") from e


def load_quartic() -> BivariatePolynomial:
    """The r=2 quartic x^4(x+4)^2 F^4 + ... + 144 x^3 (x+2)."""
    return decode_polynomial(read_fixture(QUARTIC_FIXTURE))


def has_operator_fixture(r: int) -> bool:
    return r in OPERATOR_FIXTURES


def load_operator(r: int) -> RecurrenceOperator:
    """
    Checked-in recurrence operator of a_r.

    Raises:
        FixtureFormatError: If no operator is checked in for r
    """
    name = OPERATOR_FIXTURES.get(r)
    if name is None:
        raise FixtureFormatError("operator", f"no checked-in operator for r={r}")
    return decode_operator(read_fixture(name))
