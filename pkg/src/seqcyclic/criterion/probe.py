from __future__ import annotations

import math
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence

    from seqcyclic.criterion.scenario_spec import ScenarioSpec
    from seqcyclic.results.result_types import ProbeResult


def density_probe(
    scenario: ScenarioSpec,
    x: Any,
    target: Any,
    n_max: int,
    seminorms: Callable[[Any], Sequence[float]] | None = None,
) -> ProbeResult:
    """
    Scan the orbit x, Tx, ..., T^{n_max} x for the point closest to ``target``.

    The distance is the largest seminorm of ``T^n x - target`` (infinite when the difference
    is not in Y); ties go to the smallest n.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    seminorms = scenario.y_space.seminorm_values if seminorms is None else seminorms
    distances = []
    best_n, best = 0, math.inf
    current = x
    for n in range(n_max + 1):
        difference = current - target
        if scenario.y_membership(difference):
            distance = float(max(seminorms(difference), default=0))
        else:
            distance = math.inf
        distances.append(distance)
        if distance < best:
            best_n, best = n, distance
        if n < n_max:
            current = scenario.T(current, 1)
    return {"best_n": best_n, "best_distance": best, "n_max": n_max, "distances": distances}
