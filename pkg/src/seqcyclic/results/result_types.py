from __future__ import annotations

from typing import TYPE_CHECKING, Literal, TypedDict

if TYPE_CHECKING:
    from numbers import Real
    from typing import Any

Verdict = Literal["pass", "fail", "inconclusive"]


class SampleRecord(TypedDict):
    """
    One evaluated tuple of a condition check.

    Attributes:
        condition: condition id (``"i"``, ``"ii"``, ``"iii"``, ``"i'"``, ``"ii'"``, ``"iii'"``).
        k: the outer index (the power of T for (i), (ii) and (i)').
        j: the exponent index of S, or None when the condition has none.
        x_index: index of the dense-family vector, or None.
        seminorms: p_1..p_H of the evaluated vector; empty when it is not in Y.
        fnorm: F-norm of the evaluated vector, None when it is not in Y.
        radius: radius 2**-n of the required ball V_n, None for the primed conditions.
        member: whether the evaluated vector belongs to Y.
        passed: True/False, or None when the replay raised.
        note: free text (replay errors, schedule violations).
    """

    condition: str
    k: int
    j: int | None
    x_index: int | None
    seminorms: list[Real]
    fnorm: Real | None
    radius: Real | None
    member: bool
    passed: bool | None
    note: str


class SeriesRecord(TypedDict):
    """
    A sequence over k for one fixed (j, x) pair of a primed condition.

    Attributes:
        j: fixed exponent index (None for (iii)').
        x_index: fixed dense-family index.
        j0: first k from which every recorded sample lies in Y (eventual containment).
        decay_index: first k from which every seminorm stays at most decay_tol.
        verdict: pass/fail/inconclusive of this series.
        samples: the recorded samples, ordered by k.
    """

    j: int | None
    x_index: int
    j0: int | None
    decay_index: int | None
    verdict: Verdict
    samples: list[SampleRecord]


class ConditionReport(TypedDict):
    """
    Unified structure returned by every condition checker.

    Attributes:
        condition_id: which condition was checked.
        verdict: pass/fail/inconclusive over all tuples.
        label: human readable verdict (e.g. ``"pass (finite-horizon)"``).
        witness: the first failing (or, for inconclusive reports, undecided) tuple.
        samples: all evaluated tuples in index order (flattened series for primed conditions).
        series: per (j, x) sequences; empty for the unprimed conditions.
        parameters: horizons and tolerances the check ran with.
    """

    condition_id: str
    verdict: Verdict
    label: str
    witness: SampleRecord | None
    samples: list[SampleRecord]
    series: list[SeriesRecord]
    parameters: dict[str, Any]


class CauchyRecord(TypedDict):
    M: int
    N: int
    fnorm: Real
    bound: Real
    passed: bool


class HypercyclicVectorResult(TypedDict):
    """
    Partial sum x_N = sum_{j<=N} S_{n_j} x_j with its Cauchy certificate.

    Attributes:
        N: number of summands.
        vector: x_N itself.
        summands: S_{n_j} x_j for j = 1..N.
        summand_fnorms: fnorm(S_{n_j} x_j) for j = 1..N.
        cauchy: fnorm(x_N - x_M) against sum_{j=M+1}^{N} 2**-j for every M < N.
        passed: all certificate rows hold.
    """

    N: int
    vector: Any
    summands: list[Any]
    summand_fnorms: list[Real]
    cauchy: list[CauchyRecord]
    passed: bool


class OrbitEstimate(TypedDict):
    """
    fnorm(x_k - T^{n_k} x_N) against the bound 2**-(k-2) + estimate_tol.

    ``decomposition`` holds the F-norms of the three parts of the difference: the head
    sum_{j<k} T^{n_k} S_{n_j} x_j, the defect x_k - T^{n_k} S_{n_k} x_k and the tail
    sum_{k<j<=N} T^{n_k} S_{n_j} x_j.
    """

    k: int
    N: int
    fnorm: Real | None
    bound: Real
    verdict: Verdict
    decomposition: dict[str, Real | None]
    note: str


class ProbeResult(TypedDict):
    best_n: int
    best_distance: float
    n_max: int
    distances: list[float]


class CriterionResult(TypedDict):
    """
    Unified structure returned by ``run_criterion``.

    Attributes:
        condition: ``"pass"`` when every check passed, ``"fail"`` otherwise.
        reports: the condition reports in check order.
        action_result: whatever the executed action returned (or None).
    """

    condition: str
    reports: list[ConditionReport]
    action_result: Any | None
