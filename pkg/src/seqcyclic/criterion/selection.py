from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from seqcyclic.criterion.conditions import defect, evaluate_tuple
from seqcyclic.errors import SelectionError

if TYPE_CHECKING:
    from seqcyclic.criterion.scenario_spec import ExponentSchedule, ScenarioSpec

logger = logging.getLogger(__name__)


def _admissible(scenario: ScenarioSpec, chosen: list[int], k: int, n: int) -> bool:
    """
    Whether n_k = n completes every tuple of (i)-(iii) whose indices are all <= k.

    A tuple left undecided only because its ball lies past the horizon does not block n.
    """
    x_k = scenario.x(k)
    tuples = [
        ("i", j, lambda j=j: scenario.transport(scenario.x(j), n, chosen[j]), 2 * k)
        for j in range(1, k)
    ]
    tuples += [
        ("ii", kp, lambda kp=kp: scenario.transport(x_k, chosen[kp], n), k)
        for kp in range(0, k)
    ]
    tuples.append(("iii", k, lambda: defect(scenario, k, n), k))
    for condition, other, compute, ball in tuples:
        sample = evaluate_tuple(scenario, condition, k, other, k, compute, ball=ball)
        if sample["passed"] is False or not sample["member"]:
            return False
    return True


def select_subsequence(
    scenario: ScenarioSpec, count: int
) -> tuple[ExponentSchedule, list[int]]:
    """
    Greedy diagonal selection of a subsequence of the scenario's exponent schedule.

    For k = 1..count, n_k is the first base exponent after n_{k-1} such that
    T^{n_k} S_{n_j} x_j in V_{2k} (j < k), T^{n_j} S_{n_k} x_k in V_k (j < k, with n_0 = 0)
    and x_k - T^{n_k} S_{n_k} x_k in V_k.

    Returns:
        The selected schedule (n_0 = 0, n_1, ..., n_count) and the chosen base indices.

    Raises:
        SelectionError: the base schedule ran out while choosing n_k.
    """
    base = scenario.exponent_schedule
    chosen = [0]
    indices = [0]
    for k in range(1, count + 1):
        m = indices[-1] + 1
        while True:
            if m > base.last_index:
                raise SelectionError(k, f"base schedule exhausted at index {base.last_index}")
            if _admissible(scenario, chosen, k, base[m]):
                break
            m += 1
        chosen.append(base[m])
        indices.append(m)
        logger.debug("selected n_%d = %d (base index %d)", k, base[m], m)
    logger.info("greedy selection: %s", chosen)
    return base.subsequence(indices), indices


def select_scenario(scenario: ScenarioSpec, count: int) -> ScenarioSpec:
    """The scenario with its schedule replaced by the greedy subsequence, recorded in provenance."""
    schedule, indices = select_subsequence(scenario, count)
    return scenario.with_schedule(
        schedule,
        selection={
            "rule": "greedy-diagonal", "indices": indices, "schedule": list(schedule.values)
        },
    )
