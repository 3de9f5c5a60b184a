"""
Codecs - JSON wire formats for series, polynomials, operators and cache records.
"""
from forge_words.infrastructure.codecs.documents import (
    CacheRecord,
    OperatorDocument,
    PolynomialDocument,
    SeriesDocument,
)
from forge_words.infrastructure.codecs.json_codec import (
    decode_operator,
    decode_polynomial,
    decode_series,
    dumps,
    encode_operator,
    encode_polynomial,
    encode_series,
)

__all__ = [
    "SeriesDocument",
    "PolynomialDocument",
    "OperatorDocument",
    "CacheRecord",
    "dumps",
    "encode_series",
    "decode_series",
    "encode_polynomial",
    "decode_polynomial",
    "encode_operator",
    "decode_operator",
]
