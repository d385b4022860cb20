from __future__ import annotations

import logging
import operator
from fractions import Fraction
from functools import reduce
from typing import TYPE_CHECKING, Any

from seqcyclic.criterion.conditions import REPLAY_ERRORS, defect
from seqcyclic.errors import ConstructionError
from seqcyclic.spaces.graded_space import ball_radius, fnorm

if TYPE_CHECKING:
    from seqcyclic.criterion.scenario_spec import ScenarioSpec
    from seqcyclic.results.result_types import (
        CauchyRecord,
        HypercyclicVectorResult,
        OrbitEstimate,
        Verdict,
    )

logger = logging.getLogger(__name__)


def _total(vectors: list[Any], zero: Any) -> Any:
    return reduce(operator.add, vectors, zero)


def build_partial_hypercyclic_vector(scenario: ScenarioSpec, N: int) -> HypercyclicVectorResult:
    """
    x_N = sum_{j=1}^{N} S_{n_j} x_j, with the Cauchy certificate
    fnorm(x_N - x_M) <= sum_{j=M+1}^{N} 2**-j for 1 <= M < N.

    Raises:
        ConstructionError: a summand is not in Y.
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    summands = []
    for j in range(1, N + 1):
        summand = scenario.S(scenario.x(j), scenario.n(j))
        if not scenario.y_membership(summand):
            raise ConstructionError(j, "S_{n_j} x_j is not in Y")
        summands.append(summand)

    partials = [summands[0]]
    for summand in summands[1:]:
        partials.append(partials[-1] + summand)
    vector = partials[-1]

    cauchy: list[CauchyRecord] = []
    for M in range(1, N):
        value = fnorm(scenario.y_space, vector - partials[M - 1])
        bound = Fraction(1, 2**M) - Fraction(1, 2**N)
        cauchy.append({
            "M": M,
            "N": N,
            "fnorm": value,
            "bound": bound,
            "passed": bool(value - bound <= scenario.estimate_tol),
        })
    passed = all(row["passed"] for row in cauchy)
    logger.info("partial hypercyclic vector x_%d built, Cauchy certificate %s", N,
                "holds" if passed else "fails")
    return {
        "N": N,
        "vector": vector,
        "summands": summands,
        "summand_fnorms": [fnorm(scenario.y_space, s) for s in summands],
        "cauchy": cauchy,
        "passed": passed,
    }


def verify_orbit_estimate(
    scenario: ScenarioSpec, built: HypercyclicVectorResult, k: int, margin: int = 2
) -> OrbitEstimate:
    """
    fnorm(x_k - T^{n_k} x_N) <= 2**-(k-2) + estimate_tol, for 2 <= k <= N - margin.

    The difference splits into a head (j < k), the defect of x_k and a tail (k < j <= N);
    the F-norm of each part is recorded next to the total. T^{n_k} x_N is replayed summand by
    summand as T^{n_k} S_{n_j} x_j; the stored float summands are not reused.
    """
    N = built["N"]
    bound = ball_radius(k - 2)
    estimate: OrbitEstimate = {
        "k": k,
        "N": N,
        "fnorm": None,
        "bound": bound + scenario.estimate_tol if scenario.estimate_tol else bound,
        "verdict": "inconclusive",
        "decomposition": {"head": None, "defect": None, "tail": None},
        "note": "",
    }
    if not 2 <= k <= N - margin:
        estimate["note"] = f"k={k} outside 2..N-margin={N - margin}"
        return estimate
    try:
        n_k = scenario.n(k)
        x_k = scenario.x(k)
        zero = x_k - x_k
        carried = [
            scenario.transport(scenario.x(j), n_k, scenario.n(j)) for j in range(1, N + 1)
        ]
        difference = x_k - _total(carried, zero)
        parts = {
            "head": _total(carried[: k - 1], zero),
            "defect": defect(scenario, k),
            "tail": _total(carried[k:], zero),
        }
        member = scenario.y_membership(difference)
        for name, part in parts.items():
            if scenario.y_membership(part):
                estimate["decomposition"][name] = fnorm(scenario.y_space, part)
        value = fnorm(scenario.y_space, difference) if member else None
    except REPLAY_ERRORS as exc:
        estimate["note"] = f"{type(exc).__name__}: {exc}"
        return estimate
    verdict: Verdict
    if value is None:
        verdict = "fail"
        estimate["note"] = "x_k - T^{n_k} x_N is not in Y"
    else:
        verdict = "pass" if value - bound <= scenario.estimate_tol else "fail"
    estimate["fnorm"] = value
    estimate["verdict"] = verdict
    logger.debug("orbit estimate k=%d N=%d: %s", k, N, verdict)
    return estimate
