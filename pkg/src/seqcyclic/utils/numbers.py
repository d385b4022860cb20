"""Number formatting shared by the JSON and CSV report writers."""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Real


def format_number(value: Real | complex | bool | None) -> str:
    """
    Shortest round-trip decimal for a report cell.

    Exact zero is written ``0`` and integral values without a fractional part, so that a
    zero defect reads ``0`` in every mode. Fractions are written through their nearest float.
    """
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, complex):
        if value.imag == 0:
            return format_number(value.real)
        return repr(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return format_number(_fraction_to_float(value))
    x = float(value)
    if x == 0:
        return "0"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if math.isnan(x):
        return "nan"
    if x.is_integer() and abs(x) < 1e16:
        return str(int(x))
    return repr(x)


def to_json_number(value: Real | None) -> int | float | str | None:
    """JSON-safe form of a recorded value: ints stay ints, non-finite floats become strings."""
    if value is None:
        return None
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return value.numerator
        x = _fraction_to_float(value)
    else:
        x = float(value)
    if not math.isfinite(x):
        return format_number(x)
    if x.is_integer() and abs(x) < 1e16:
        return int(x)
    return x


def _fraction_to_float(value: Fraction) -> float:
    try:
        return float(value)
    except OverflowError:
        return math.inf if value > 0 else -math.inf
