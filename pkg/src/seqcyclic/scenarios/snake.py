from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from seqcyclic.criterion.scenario_spec import ExponentSchedule, ScenarioSpec
from seqcyclic.operators.snake import ShiftParams, SnakeShift, build_snake_enumeration
from seqcyclic.scenarios.dense_families import ENUMERATION_ID, IndexedFamily, dense_grid_targets
from seqcyclic.spaces.graded_space import GradedSpace
from seqcyclic.spaces.grid_vector import GridVector
from seqcyclic.spaces.sequence_norms import SequenceNorm

if TYPE_CHECKING:
    from seqcyclic.operators.snake import Coverage

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SnakeScenarioConfig:
    """
    Configuration of the snake shift scenario.

    Attributes:
        params: lambda, the sequence space kind and the growth budget.
        target_count: how many vectors of the dense grid family to schedule.
        targets: explicit targets, overriding the dense family.
        coverage: builder coverage policy (``"full"`` or ``"minimal"``).
        p: exponent of ell^p when ``params.space_kind == "ellp"``.
        horizon: number of materialized seminorms.
        decay_tol: defaults to 0 for an exact lambda and 1e-8 otherwise.
    """

    params: ShiftParams = field(default_factory=ShiftParams)
    target_count: int = 8
    targets: tuple[GridVector, ...] | None = None
    coverage: Coverage = "full"
    p: float = 1
    horizon: int = 12
    k_max: int = 4
    tail_max: int = 8
    decay_tol: float | None = None
    transport_tol: float = 1e-10
    estimate_tol: float = 1e-9

    def __post_init__(self):
        count = self.count
        if count < 1:
            raise ValueError(f"at least one target is required, got {count}")
        if self.tail_max > count or self.k_max > count:
            raise ValueError(
                f"k_max={self.k_max} and tail_max={self.tail_max} must not exceed the "
                f"{count} scheduled targets"
            )

    @property
    def count(self) -> int:
        return len(self.targets) if self.targets is not None else self.target_count

    def norm(self) -> SequenceNorm:
        kind = self.params.space_kind
        if kind == "ellp":
            return SequenceNorm.ellp(self.p)
        if kind == "c0":
            return SequenceNorm.c0()
        return SequenceNorm.s(0)


def make_snake_scenario(cfg: SnakeScenarioConfig | None = None) -> ScenarioSpec:
    """
    The snake shift over an enumeration built for the configured targets; Y is the configured
    sequence space embedded as summand 1 and the exponent schedule is n_k = l_k.

    Raises:
        ScheduleError: the builder cannot schedule a target (budget, coefficient bound).
    """
    cfg = cfg or SnakeScenarioConfig()
    if cfg.targets is not None:
        targets, family_id = list(cfg.targets), "explicit"
    else:
        targets = IndexedFamily(dense_grid_targets).prefix(cfg.target_count)
        family_id = ENUMERATION_ID
    enumeration = build_snake_enumeration(targets, cfg.params, cfg.coverage)
    operator = SnakeShift(enumeration)
    exact = cfg.params.exact
    decay_tol = cfg.decay_tol if cfg.decay_tol is not None else (0 if exact else 1e-8)
    norm = cfg.norm()
    logger.info("snake scenario: %d targets, lambda=%s, space=%s", len(targets), cfg.params.lam,
                norm.label)
    return ScenarioSpec(
        kind="snake",
        operator=operator,
        dense_family=enumeration.target,
        exponent_schedule=ExponentSchedule(enumeration.exponent_schedule()),
        y_space=GradedSpace.of_sequence_norm(norm, cfg.horizon),
        y_membership=lambda v: v.in_first_summand(),
        k_max=cfg.k_max,
        tail_max=cfg.tail_max,
        decay_tol=decay_tol,
        transport_tol=cfg.transport_tol,
        estimate_tol=cfg.estimate_tol,
        exact=exact,
        provenance={
            "scenario": "snake",
            "dense_family": family_id,
            "lambda": str(cfg.params.lam),
            "space": "s" if norm.kind == "s" else norm.label,
            "coverage": cfg.coverage,
            "growth_budget": cfg.params.growth_budget,
            "path_length": len(enumeration.path),
            "schedules": enumeration.schedule_table(),
        },
    )
