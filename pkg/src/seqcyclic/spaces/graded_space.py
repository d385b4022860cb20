from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING, Any, Callable, Generic, TypeVar

from seqcyclic.errors import HorizonError
from seqcyclic.spaces.grids import GridSupProfile
from seqcyclic.spaces.sequence_norms import SequenceSpaceProfile

if TYPE_CHECKING:
    from collections.abc import Sequence
    from numbers import Real

    from seqcyclic.spaces.grids import CompactDiskGrid
    from seqcyclic.spaces.sequence_norms import SequenceNorm

V = TypeVar("V")


class GradedSpace(Generic[V]):
    """
    The F-space (Y, tau) through a finite horizon of its increasing seminorm family
    p_1 <= p_2 <= ... <= p_horizon.

    The family is given as a profile: one callable returning all ``horizon`` values at once,
    which lets grid evaluations be shared between seminorms.
    """

    def __init__(
        self,
        profile: Callable[[V], Sequence[Real]],
        horizon: int,
        name: str = "Y",
        description: dict[str, Any] | None = None,
    ):
        if horizon < 1:
            raise ValueError(f"horizon must be >= 1, got {horizon}")
        self.profile = profile
        self.horizon = horizon
        self.name = name
        self.description = description or {}

    @classmethod
    def of_grids(cls, grids: list[CompactDiskGrid], name: str = "H(U)") -> GradedSpace:
        profile = GridSupProfile(grids)
        return cls(profile, len(grids), name, profile.describe())

    @classmethod
    def of_sequence_norm(cls, norm: SequenceNorm, horizon: int) -> GradedSpace:
        profile = SequenceSpaceProfile(norm, horizon)
        return cls(profile, horizon, norm.label, profile.describe())

    def seminorm_values(self, v: V) -> tuple[Real, ...]:
        values = tuple(self.profile(v))
        if len(values) < self.horizon:
            raise HorizonError(f"profile returned {len(values)} values, horizon is {self.horizon}")
        return values[: self.horizon]

    def seminorm(self, n: int) -> Callable[[V], Real]:
        if not 1 <= n <= self.horizon:
            raise HorizonError(f"seminorm p_{n} is beyond the horizon {self.horizon}")
        return lambda v: self.seminorm_values(v)[n - 1]


def ball_radius(n: int) -> Fraction:
    """Radius of V_n; V_0 and below are the whole budget {fnorm <= 1}."""
    return Fraction(1, 2**n) if n > 0 else Fraction(1)


def fnorm_of_values(values: Sequence[Real]) -> Real:
    """``sum_n 2**-n * min(1, p_n)``; exact when every value is a Fraction."""
    total: Real = Fraction(0)
    for n, p in enumerate(values, start=1):
        total += Fraction(1, 2**n) * min(1, p)
    return total


def fnorm(space: GradedSpace, v: Any) -> Real:
    return fnorm_of_values(space.seminorm_values(v))


def ball_membership(space: GradedSpace, v: Any, n: int) -> bool:
    """True iff v lies in V_n = {fnorm <= 2**-n}."""
    if n > space.horizon:
        raise HorizonError(f"V_{n} is beyond the horizon {space.horizon}")
    return fnorm(space, v) <= ball_radius(n)
