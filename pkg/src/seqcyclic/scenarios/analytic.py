from __future__ import annotations

import logging
from dataclasses import dataclass, field

from seqcyclic.criterion.scenario_spec import ExponentSchedule, ScenarioSpec
from seqcyclic.operators.composition import CompositionSquare
from seqcyclic.scenarios.dense_families import IndexedFamily, analytic_dense_vectors
from seqcyclic.spaces.dyadic import DyadicPolynomial
from seqcyclic.spaces.graded_space import GradedSpace
from seqcyclic.spaces.grids import CompactDiskGrid, exhaustion_grids

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AnalyticScenarioConfig:
    """
    Configuration of the composition scenario T = C_{z^2} on germs at ]0, 1[.

    Attributes:
        dense_poly_count: k_max, the number of dense vectors x_k = z(1-z)p_k the checks use.
        horizon: number of compacts K_1..K_horizon (disks centered 1/2, radii
            (1/2)(1 - 1/(j+1))).
        mesh_density: rings per disk grid.
        schedule_length: last index of the base schedule n_k = k.
        grids: explicit compacts, overriding ``horizon`` and ``mesh_density``.
    """

    dense_poly_count: int = 5
    horizon: int = 10
    mesh_density: int = 16
    schedule_length: int = 256
    tail_max: int = 60
    decay_tol: float = 1e-8
    estimate_tol: float = 1e-9
    grids: tuple[CompactDiskGrid, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.dense_poly_count < 1:
            raise ValueError(f"dense_poly_count must be >= 1, got {self.dense_poly_count}")
        if self.schedule_length < 1:
            raise ValueError(f"schedule_length must be >= 1, got {self.schedule_length}")
        meshes = self.grid_meshes
        radii = [g.radius for g in meshes]
        if any(b <= a for a, b in zip(radii, radii[1:])):
            raise ValueError(f"grid radii must be strictly increasing, got {radii}")
        if not all(g.inside_u() for g in meshes):
            raise ValueError("every compact must lie inside the disk of center 1/2, radius 1/2")

    @property
    def grid_meshes(self) -> list[CompactDiskGrid]:
        if self.grids is not None:
            return list(self.grids)
        return exhaustion_grids(self.horizon, self.mesh_density)


def make_analytic_scenario(cfg: AnalyticScenarioConfig | None = None) -> ScenarioSpec:
    """
    T = C_{z^2} and S_n = C_{gamma_n} on dyadic polynomials, Y = germs on the compacts of
    ``cfg`` with the cumulative grid sup seminorms, and the base schedule n_k = k.
    """
    cfg = cfg or AnalyticScenarioConfig()
    grids = cfg.grid_meshes
    family = IndexedFamily(analytic_dense_vectors)
    space = GradedSpace.of_grids(grids)
    logger.info("analytic scenario: %d compacts, mesh %s", len(grids),
                [g.mesh_density for g in grids])
    return ScenarioSpec(
        kind="analytic",
        operator=CompositionSquare(),
        dense_family=family,
        exponent_schedule=ExponentSchedule.natural(cfg.schedule_length),
        y_space=space,
        y_membership=lambda v: isinstance(v, DyadicPolynomial),
        k_max=cfg.dense_poly_count,
        tail_max=cfg.tail_max,
        decay_tol=cfg.decay_tol,
        estimate_tol=cfg.estimate_tol,
        exact=False,
        provenance={
            "scenario": "analytic",
            "dense_family": family.enumeration_id,
            "dense_family_rule": "x_k = z(1-z) p_k, p_k by height",
            "base_schedule": "n_k = k",
            "grids": space.description,
        },
    )
