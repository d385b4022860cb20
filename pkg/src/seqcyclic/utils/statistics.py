from __future__ import annotations

import math
import statistics
from typing import TYPE_CHECKING, Literal

if TYPE_CHECKING:
    from collections.abc import Sequence
    from numbers import Real

__all__ = ["describe", "percentile_linear"]

NonFinitePolicy = Literal["ignore", "cap", "error"]

_STAT_KEYS = ("count", "mean", "median", "min", "max", "q25", "q75", "zeros")


def percentile_linear(sorted_values: Sequence[float], q: float) -> float:
    """Percentile by linear interpolation between closest ranks; ``sorted_values`` is sorted."""
    if not sorted_values:
        return math.nan
    position = (len(sorted_values) - 1) * q
    below = math.floor(position)
    weight = position - below
    if weight == 0:
        return sorted_values[below]
    return sorted_values[below] * (1 - weight) + sorted_values[below + 1] * weight


def _finite_policy(
    xs: list[float], policy: NonFinitePolicy, cap_value: float | None, notes: list[str]
) -> list[float]:
    if all(math.isfinite(v) for v in xs):
        return xs
    if policy == "ignore":
        notes.append("non-finite values ignored")
        return [v for v in xs if math.isfinite(v)]
    if policy == "cap":
        if cap_value is None:
            raise ValueError("cap_value must be provided when nonfinite='cap'")
        notes.append(f"non-finite values capped to {cap_value}")
        return [v if math.isfinite(v) else cap_value for v in xs]
    if policy == "error":
        raise ValueError("non-finite values present")
    raise ValueError(f"unknown nonfinite policy: {policy}")


def describe(
    values: Sequence[Real | None],
    nonfinite: NonFinitePolicy = "cap",
    cap_value: float | None = 1.0,
) -> dict[str, float | str]:
    """
    Summarize a column of recorded seminorm or F-norm values.

    Missing entries (``None``, recorded for vectors outside Y) are dropped and counted in the
    comments. Exact values (``Fraction``) are converted to float. The F-norm saturates at 1,
    hence the default cap for unbounded values.

    Args:
        values: recorded values.
        nonfinite: ``"ignore"`` drops non-finite values, ``"cap"`` replaces them with
            ``cap_value``, ``"error"`` raises.
        cap_value: replacement when ``nonfinite="cap"``.

    Returns:
        dict: ``count``, ``mean``, ``median``, ``min``, ``max``, ``q25``, ``q75``, ``zeros``
            (number of exact zeros) and ``comments``.

    Raises:
        ValueError: non-finite values under ``nonfinite="error"``, or an unknown policy.
    """
    notes: list[str] = []
    present = [v for v in values if v is not None]
    if len(present) < len(values):
        notes.append(f"{len(values) - len(present)} missing values dropped")
    xs = sorted(_finite_policy([float(v) for v in present], nonfinite, cap_value, notes))

    if not xs:
        summary: dict[str, float | str] = dict.fromkeys(_STAT_KEYS, math.nan)
        summary.update(count=0, zeros=0, comments="; ".join(notes) or "no values")
        return summary

    return {
        "count": len(xs),
        "mean": statistics.fmean(xs),
        "median": statistics.median(xs),
        "min": xs[0],
        "max": xs[-1],
        "q25": percentile_linear(xs, 0.25),
        "q75": percentile_linear(xs, 0.75),
        "zeros": sum(1 for v in xs if v == 0),
        "comments": "; ".join(notes),
    }
