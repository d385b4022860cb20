"""
Structured-text forms of polynomials and grid vectors used by the reports.

Scalars are written as strings: integers and fractions as ``"p"`` / ``"p/q"`` (exact), floats
with ``repr`` and complex numbers in Python's ``(a+bj)`` notation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING

from seqcyclic.spaces.dyadic import DyadicPolynomial
from seqcyclic.spaces.grid_vector import GridVector

if TYPE_CHECKING:
    from seqcyclic.spaces.dyadic import Scalar


def encode_scalar(value: Scalar) -> str:
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, complex):
        return repr(value)
    return repr(float(value))


def decode_scalar(text: str) -> Scalar:
    text = text.strip()
    if "j" in text:
        return complex(text)
    lowered = text.lower()
    if any(marker in lowered for marker in (".", "e", "inf", "nan")):
        return float(text)
    value = Fraction(text)
    return value.numerator if value.denominator == 1 else value


def polynomial_to_records(f: DyadicPolynomial) -> list[list[str]]:
    """``[[exponent, coefficient], ...]`` in increasing exponent order."""
    return [[str(q), encode_scalar(c)] for q, c in f.terms.items()]


def polynomial_from_records(records: list[list[str]]) -> DyadicPolynomial:
    return DyadicPolynomial((Fraction(q), decode_scalar(c)) for q, c in records)


def grid_vector_to_records(v: GridVector) -> list[list]:
    """``[[i, j, coefficient], ...]`` in row-major order."""
    return [[i, j, encode_scalar(c)] for (i, j), c in v]


def grid_vector_from_records(records: list[list]) -> GridVector:
    return GridVector(((int(i), int(j)), decode_scalar(c)) for i, j, c in records)


def vector_to_records(v: DyadicPolynomial | GridVector) -> dict:
    if isinstance(v, DyadicPolynomial):
        return {"type": "dyadic-polynomial", "terms": polynomial_to_records(v)}
    if isinstance(v, GridVector):
        return {"type": "grid-vector", "entries": grid_vector_to_records(v)}
    raise TypeError(f"cannot serialize {type(v).__name__}")


def vector_from_records(data: dict) -> DyadicPolynomial | GridVector:
    kind = data.get("type")
    if kind == "dyadic-polynomial":
        return polynomial_from_records(data["terms"])
    if kind == "grid-vector":
        return grid_vector_from_records(data["entries"])
    raise ValueError(f"unknown vector type: {kind}")
