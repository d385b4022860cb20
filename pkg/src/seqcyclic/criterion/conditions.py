"""
Checkers of the three conditions of the sequential hypercyclicity criterion:

(i)   T^{n_k} S_{n_j} x_j in V_{2k}         for k >= 2, 1 <= j < k
(ii)  T^{n_k} S_{n_j} x_j in V_j            for k >= 0, j > k
(iii) x_k - T^{n_k} S_{n_k} x_k in V_k      for k >= 1

Every tuple is evaluated independently; replay errors make a tuple inconclusive instead of
aborting the check.
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Any

from seqcyclic.errors import SeqcyclicError
from seqcyclic.spaces.graded_space import ball_radius, fnorm_of_values

if TYPE_CHECKING:
    from collections.abc import Callable

    from seqcyclic.criterion.scenario_spec import ScenarioSpec
    from seqcyclic.results.result_types import ConditionReport, SampleRecord, Verdict

logger = logging.getLogger(__name__)

#: exceptions a replay may raise; anything else is a bug and propagates
REPLAY_ERRORS = (SeqcyclicError, ArithmeticError, ValueError, LookupError)


def make_sample(
    condition: str,
    k: int,
    j: int | None,
    x_index: int | None,
    *,
    seminorms: list | None = None,
    fnorm: Any = None,
    radius: Any = None,
    member: bool = False,
    passed: bool | None = None,
    note: str = "",
) -> SampleRecord:
    return {
        "condition": condition,
        "k": k,
        "j": j,
        "x_index": x_index,
        "seminorms": list(seminorms or []),
        "fnorm": fnorm,
        "radius": radius,
        "member": member,
        "passed": passed,
        "note": note,
    }


def evaluate_tuple(
    scenario: ScenarioSpec,
    condition: str,
    k: int,
    j: int | None,
    x_index: int | None,
    compute: Callable[[], Any],
    ball: int | None = None,
) -> SampleRecord:
    """
    Replay ``compute()`` and measure the result.

    With ``ball`` set the sample passes iff the vector is in Y and its F-norm is at most
    2**-ball. Without it ``passed`` only reflects membership in Y.

    A ball past the horizon of Y cannot be certified from the materialised seminorms, whose
    unseen tail may add up to 2**-horizon: such a sample passes only for the zero vector, fails
    when the partial F-norm already exceeds the radius, and is left undecided otherwise.
    """
    radius = _radius(ball)
    try:
        v = compute()
        member = bool(scenario.y_membership(v))
        if not member:
            return make_sample(condition, k, j, x_index, radius=radius, passed=False,
                               note="not in Y")
        values = list(scenario.y_space.seminorm_values(v))
    except REPLAY_ERRORS as exc:
        logger.debug("condition %s, k=%s, j=%s: replay failed: %s", condition, k, j, exc)
        return make_sample(condition, k, j, x_index, radius=radius,
                           note=f"{type(exc).__name__}: {exc}")
    value = fnorm_of_values(values)
    passed: bool | None = True if radius is None else bool(value <= radius)
    note = ""
    horizon = scenario.y_space.horizon
    if ball is not None and ball > horizon and passed and not v.is_zero():
        passed = None
        note = f"V_{ball} is beyond the horizon {horizon}"
    return make_sample(condition, k, j, x_index, seminorms=values, fnorm=value, radius=radius,
                       member=True, passed=passed, note=note)


def _radius(ball: int | None):
    return None if ball is None else ball_radius(ball)


def schedule_sample(scenario: ScenarioSpec, condition: str, last: int) -> SampleRecord | None:
    """A failing sample when n_0..n_last is not strictly increasing."""
    schedule = scenario.exponent_schedule
    bad = schedule.first_violation()
    if bad is None or bad > last:
        return None
    return make_sample(
        condition, bad, bad - 1, None, member=True, passed=False,
        note=f"schedule not increasing: n_{bad}={schedule.values[bad]} "
             f"<= n_{bad - 1}={schedule.values[bad - 1]}",
    )


def summarize(
    condition_id: str,
    samples: list[SampleRecord],
    parameters: dict[str, Any],
    finite_horizon: bool = False,
) -> ConditionReport:
    verdict: Verdict = "pass"
    witness = None
    failing = next((s for s in samples if s["passed"] is False), None)
    undecided = next((s for s in samples if s["passed"] is None), None)
    if failing is not None:
        verdict, witness = "fail", failing
    elif undecided is not None:
        verdict, witness = "inconclusive", undecided
    label = verdict + (" (finite-horizon)" if finite_horizon and verdict == "pass" else "")
    logger.info("condition %s: %s over %d tuples", condition_id, label, len(samples))
    return {
        "condition_id": condition_id,
        "verdict": verdict,
        "label": label,
        "witness": witness,
        "samples": samples,
        "series": [],
        "parameters": parameters,
    }


def check_condition_i(scenario: ScenarioSpec, k_max: int | None = None) -> ConditionReport:
    """(i): T^{n_k} S_{n_j} x_j in V_{2k} for 2 <= k <= k_max and 1 <= j < k."""
    k_max = scenario.k_max if k_max is None else k_max
    samples = []
    if (bad := schedule_sample(scenario, "i", k_max)) is not None:
        samples.append(bad)
    for k in range(2, k_max + 1):
        for j in range(1, k):
            samples.append(
                evaluate_tuple(
                    scenario, "i", k, j, j,
                    lambda k=k, j=j: scenario.transport(scenario.x(j), scenario.n(k),
                                                        scenario.n(j)),
                    ball=2 * k,
                )
            )
    return summarize("i", samples, {"k_max": k_max})


def check_condition_ii(
    scenario: ScenarioSpec, k_max: int | None = None, tail_max: int | None = None
) -> ConditionReport:
    """(ii): T^{n_k} S_{n_j} x_j in V_j for 0 <= k <= k_max and k < j <= tail_max."""
    k_max = scenario.k_max if k_max is None else k_max
    tail_max = scenario.tail_max if tail_max is None else tail_max
    samples = []
    if (bad := schedule_sample(scenario, "ii", tail_max)) is not None:
        samples.append(bad)
    for k in range(0, k_max + 1):
        for j in range(k + 1, tail_max + 1):
            samples.append(
                evaluate_tuple(
                    scenario, "ii", k, j, j,
                    lambda k=k, j=j: scenario.transport(scenario.x(j), scenario.n(k),
                                                        scenario.n(j)),
                    ball=j,
                )
            )
    return summarize("ii", samples, {"k_max": k_max, "tail_max": tail_max})


def check_condition_iii(scenario: ScenarioSpec, k_max: int | None = None) -> ConditionReport:
    """(iii): x_k - T^{n_k} S_{n_k} x_k in V_k for 1 <= k <= k_max."""
    k_max = scenario.k_max if k_max is None else k_max
    samples = []
    if (bad := schedule_sample(scenario, "iii", k_max)) is not None:
        samples.append(bad)
    for k in range(1, k_max + 1):
        samples.append(
            evaluate_tuple(scenario, "iii", k, k, k, lambda k=k: defect(scenario, k), ball=k)
        )
    return summarize("iii", samples, {"k_max": k_max})


def defect(scenario: ScenarioSpec, k: int, n: int | None = None) -> Any:
    """x_k - T^n S_n x_k, with n = n_k by default."""
    n = scenario.n(k) if n is None else n
    x = scenario.x(k)
    return x - scenario.transport(x, n, n)
