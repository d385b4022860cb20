from __future__ import annotations

from fractions import Fraction

from seqcyclic.criterion.scenario_spec import ExponentSchedule, ScenarioSpec
from seqcyclic.operators.index_shift import IndexShift
from seqcyclic.scenarios.dense_families import IndexedFamily, oracle_targets
from seqcyclic.spaces.graded_space import GradedSpace
from seqcyclic.spaces.sequence_norms import SequenceNorm

MAX_ORACLE_LENGTH = 10**4


def make_oracle_shift(
    length: int,
    lam: Fraction | float = Fraction(2),
    *,
    horizon: int = 12,
    schedule_length: int = 32,
    k_max: int = 4,
    tail_max: int = 8,
) -> ScenarioSpec:
    """
    Index-level weighted backward shift on one row, for brute-force cross-checks.

    The dense family cycles through e_0..e_{length-1}; the schedule is n_k = length * k, so
    T^{n_k} annihilates every earlier target. ``lam <= 1`` is accepted (negative controls).
    """
    if not 1 <= length <= MAX_ORACLE_LENGTH:
        raise ValueError(f"length must be in 1..{MAX_ORACLE_LENGTH}, got {length}")
    family = IndexedFamily(lambda: oracle_targets(length), "oracle-basis-v1")
    exact = isinstance(lam, (int, Fraction))
    return ScenarioSpec(
        kind="oracle",
        operator=IndexShift(lam, length),
        dense_family=family,
        exponent_schedule=ExponentSchedule(length * k for k in range(schedule_length + 1)),
        y_space=GradedSpace.of_sequence_norm(SequenceNorm.ellp(1), horizon),
        y_membership=lambda v: v.in_first_summand(),
        k_max=k_max,
        tail_max=tail_max,
        decay_tol=0 if exact else 1e-8,
        transport_tol=1e-10,
        exact=exact,
        provenance={
            "scenario": "oracle",
            "dense_family": family.enumeration_id,
            "lambda": str(lam),
            "length": length,
            "base_schedule": f"n_k = {length} k",
        },
    )
