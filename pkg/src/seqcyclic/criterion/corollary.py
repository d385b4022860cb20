"""
Eventual-containment checks of the primed conditions.

(i)'   (T^{n_k} S_{n_j} x)_k   is eventually in Y and tends to 0
(ii)'  (T^{n_j} S_{n_k} x)_k   is eventually in Y and tends to 0
(iii)' (x - T^{n_k} S_{n_k} x)_k   is eventually in Y and tends to 0

A finite run can only show that a sequence enters Y and drops below a tolerance before the
horizon ends; passing reports are labelled "pass (finite-horizon)".
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from seqcyclic.criterion.conditions import defect, evaluate_tuple

if TYPE_CHECKING:
    from collections.abc import Callable

    from seqcyclic.criterion.scenario_spec import ScenarioSpec
    from seqcyclic.results.result_types import ConditionReport, SeriesRecord, Verdict

logger = logging.getLogger(__name__)


def _tail_start(flags: list[bool]) -> int | None:
    """Position from which every flag is true, None if the last one is false."""
    start = None
    for position, flag in enumerate(flags):
        if not flag:
            start = None
        elif start is None:
            start = position
    return start


def tabulate_series(
    scenario: ScenarioSpec,
    condition: str,
    j: int | None,
    x_index: int,
    tail_max: int,
    compute: Callable[[int], object],
    tol: float,
) -> SeriesRecord:
    ks = list(range(1, tail_max + 1))
    samples = [
        evaluate_tuple(scenario, condition, k, j, x_index, lambda k=k: compute(k)) for k in ks
    ]
    for sample in samples:
        if sample["passed"] is not None:
            sample["passed"] = sample["member"] and max(sample["seminorms"], default=0) <= tol
    members = [s["member"] for s in samples]
    small = [bool(s["passed"]) for s in samples]
    j0 = _tail_start(members)
    decay = _tail_start(small)
    verdict: Verdict
    if any(s["passed"] is None for s in samples):
        verdict = "inconclusive"
    elif decay is not None:
        verdict = "pass"
    else:
        verdict = "fail"
    return {
        "j": j,
        "x_index": x_index,
        "j0": None if j0 is None else ks[j0],
        "decay_index": None if decay is None else ks[decay],
        "verdict": verdict,
        "samples": samples,
    }


def summarize_series(
    condition_id: str, series: list[SeriesRecord], parameters: dict
) -> ConditionReport:
    verdict: Verdict = "pass"
    witness = None
    failing = next((s for s in series if s["verdict"] == "fail"), None)
    undecided = next((s for s in series if s["verdict"] == "inconclusive"), None)
    if failing is not None:
        verdict, witness = "fail", failing["samples"][-1]
    elif undecided is not None:
        verdict = "inconclusive"
        witness = next(s for s in undecided["samples"] if s["passed"] is None)
    label = "pass (finite-horizon)" if verdict == "pass" else verdict
    logger.info("condition %s: %s over %d series", condition_id, label, len(series))
    return {
        "condition_id": condition_id,
        "verdict": verdict,
        "label": label,
        "witness": witness,
        "samples": [sample for s in series for sample in s["samples"]],
        "series": series,
        "parameters": parameters,
    }


def check_condition_i_primed(
    scenario: ScenarioSpec, k_max: int | None = None, tail_max: int | None = None
) -> ConditionReport:
    k_max = scenario.k_max if k_max is None else k_max
    tail_max = scenario.tail_max if tail_max is None else tail_max
    series = [
        tabulate_series(
            scenario, "i'", j, m, tail_max,
            lambda k, j=j, m=m: scenario.transport(scenario.x(m), scenario.n(k),
                                                   scenario.n(j)),
            scenario.decay_tol,
        )
        for j in range(1, k_max + 1)
        for m in range(1, k_max + 1)
    ]
    parameters = {"k_max": k_max, "tail_max": tail_max, "decay_tol": scenario.decay_tol}
    return summarize_series("i'", series, parameters)


def check_condition_ii_primed(
    scenario: ScenarioSpec, k_max: int | None = None, tail_max: int | None = None
) -> ConditionReport:
    k_max = scenario.k_max if k_max is None else k_max
    tail_max = scenario.tail_max if tail_max is None else tail_max
    tol = scenario.tolerance_ii
    series = [
        tabulate_series(
            scenario, "ii'", j, m, tail_max,
            lambda k, j=j, m=m: scenario.transport(scenario.x(m), scenario.n(j),
                                                   scenario.n(k)),
            tol,
        )
        for j in range(0, k_max + 1)
        for m in range(1, k_max + 1)
    ]
    return summarize_series("ii'", series, {"k_max": k_max, "tail_max": tail_max, "decay_tol": tol})


def check_condition_iii_primed(
    scenario: ScenarioSpec, k_max: int | None = None, tail_max: int | None = None
) -> ConditionReport:
    k_max = scenario.k_max if k_max is None else k_max
    tail_max = scenario.tail_max if tail_max is None else tail_max
    series = [
        tabulate_series(
            scenario, "iii'", None, m, tail_max,
            lambda k, m=m: defect(scenario, m, scenario.n(k)),
            scenario.decay_tol,
        )
        for m in range(1, k_max + 1)
    ]
    parameters = {"k_max": k_max, "tail_max": tail_max, "decay_tol": scenario.decay_tol}
    return summarize_series("iii'", series, parameters)


def check_corollary_conditions(
    scenario: ScenarioSpec, k_max: int | None = None, tail_max: int | None = None
) -> tuple[ConditionReport, ConditionReport, ConditionReport]:
    """Reports of (i)', (ii)' and (iii)' over the dense-family prefix x_1..x_{k_max}."""
    return (
        check_condition_i_primed(scenario, k_max, tail_max),
        check_condition_ii_primed(scenario, k_max, tail_max),
        check_condition_iii_primed(scenario, k_max, tail_max),
    )
