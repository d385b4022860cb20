from __future__ import annotations

from fractions import Fraction

import pytest

from seqcyclic.spaces.dyadic import DyadicPolynomial
from seqcyclic.spaces.grid_vector import GridVector
from seqcyclic.spaces.serialization import (
    decode_scalar,
    encode_scalar,
    vector_from_records,
    vector_to_records,
)


@pytest.mark.parametrize(
    ("value", "text"),
    [(3, "3"), (Fraction(-1, 2), "-1/2"), (0.25, "0.25"), (1 + 2j, "(1+2j)")],
)
def test_scalar_encoding(value, text):
    assert encode_scalar(value) == text
    assert decode_scalar(text) == value


def test_decoded_types():
    assert type(decode_scalar("4/2")) is int
    assert type(decode_scalar("1e-3")) is float
    assert decode_scalar(" 7 ") == 7


def test_booleans_are_not_scalars():
    with pytest.raises(TypeError):
        encode_scalar(True)


def test_polynomial_records():
    f = DyadicPolynomial({2: -3, Fraction(1, 2): 1})
    records = vector_to_records(f)
    assert records == {"type": "dyadic-polynomial", "terms": [["1/2", "1"], ["2", "-3"]]}
    assert vector_from_records(records) == f


def test_grid_vector_records():
    v = GridVector({(2, 1): Fraction(1, 4), (1, 3): -1})
    records = vector_to_records(v)
    assert records == {"type": "grid-vector", "entries": [[1, 3, "-1"], [2, 1, "1/4"]]}
    assert vector_from_records(records) == v


def test_unknown_records():
    with pytest.raises(ValueError):
        vector_from_records({"type": "matrix"})
    with pytest.raises(TypeError):
        vector_to_records([1, 2])  # type: ignore[arg-type]
