from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from seqcyclic.spaces.dyadic import DyadicPolynomial

#: center and radius of U, the open disk on which the analytic germs live
U_CENTER = 0.5
U_RADIUS = 0.5


@dataclass(frozen=True)
class CompactDiskGrid:
    """
    A sampled closed disk.

    The sample is the center plus ``mesh_density`` concentric rings; ring ``a`` has radius
    ``radius * a / mesh_density`` and ``8 * a`` equispaced points starting at angle 0, so the
    boundary circle carries ``8 * mesh_density`` points. Doubling the density gives a grid that
    contains the previous one.
    """

    center: complex
    radius: float
    mesh_density: int
    points: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError(f"radius must be positive, got {self.radius}")
        if self.mesh_density < 1:
            raise ValueError(f"mesh_density must be >= 1, got {self.mesh_density}")
        rings = [np.array([complex(self.center)])]
        for a in range(1, self.mesh_density + 1):
            angles = 2 * np.pi * np.arange(8 * a) / (8 * a)
            rings.append(self.center + self.radius * a / self.mesh_density * np.exp(1j * angles))
        points = np.concatenate(rings)
        points.setflags(write=False)
        object.__setattr__(self, "points", points)

    @property
    def max_modulus(self) -> float:
        """R = max |z| over the closed disk."""
        return abs(complex(self.center)) + self.radius

    def inside_u(self) -> bool:
        """True when the closed disk lies in U (center 1/2, radius 1/2)."""
        return abs(complex(self.center) - U_CENTER) + self.radius < U_RADIUS

    def refined(self) -> CompactDiskGrid:
        return CompactDiskGrid(self.center, self.radius, 2 * self.mesh_density)


def sup_on_grid(f: DyadicPolynomial, K: CompactDiskGrid) -> float:
    """max over the grid points of |f(z)|, the discretized seminorm p_K(f)."""
    if f.is_zero():
        return 0.0
    return float(np.max(np.abs(f.evaluate_many(K.points))))


def exhaustion_grids(horizon: int, mesh_density: int) -> list[CompactDiskGrid]:
    """K_1..K_horizon: closed disks centered 1/2 with radii (1/2)(1 - 1/(j+1))."""
    return [
        CompactDiskGrid(complex(U_CENTER), U_RADIUS * (1 - 1 / (j + 1)), mesh_density)
        for j in range(1, horizon + 1)
    ]


class GridSupProfile:
    """
    Seminorm profile on a nested family of grids: the n-th value is the largest grid sup over
    K_1..K_n, so the profile is nondecreasing in n.
    """

    def __init__(self, grids: list[CompactDiskGrid]):
        if not grids:
            raise ValueError("at least one grid is required")
        self.grids = list(grids)

    def __call__(self, f: DyadicPolynomial) -> tuple[float, ...]:
        values = []
        running = 0.0
        for grid in self.grids:
            running = max(running, sup_on_grid(f, grid))
            values.append(running)
        return tuple(values)

    def describe(self) -> dict:
        return {
            "seminorms": "cumulative grid sup",
            "radii": [g.radius for g in self.grids],
            "mesh_densities": [g.mesh_density for g in self.grids],
        }
