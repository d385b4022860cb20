from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Literal

from seqcyclic.errors import NotInEmbeddedYError

if TYPE_CHECKING:
    from numbers import Real

    from seqcyclic.spaces.grid_vector import GridVector

SequenceKind = Literal["ellp", "c0", "s"]


@dataclass(frozen=True)
class SequenceNorm:
    """
    A norm on the embedded copy of Y (summand 1): ``ellp(p)`` for p >= 1, ``c0``, or the k-th
    norm ``||x||_k = sum |x_j| j**k`` of the space s of rapidly decreasing sequences.
    """

    kind: SequenceKind
    p: float = 1
    k: int = 0

    def __post_init__(self):
        if self.kind not in ("ellp", "c0", "s"):
            raise ValueError(f"unknown sequence norm kind: {self.kind}")
        if self.kind == "ellp" and self.p < 1:
            raise ValueError(f"ell^p needs p >= 1, got {self.p}")
        if self.kind == "s" and self.k < 0:
            raise ValueError(f"s-norm index must be >= 0, got {self.k}")

    @classmethod
    def ellp(cls, p: float = 1) -> SequenceNorm:
        return cls("ellp", p=p)

    @classmethod
    def c0(cls) -> SequenceNorm:
        return cls("c0")

    @classmethod
    def s(cls, k: int) -> SequenceNorm:
        return cls("s", k=k)

    @property
    def label(self) -> str:
        if self.kind == "ellp":
            return f"l{self.p:g}"
        if self.kind == "c0":
            return "c0"
        return f"s[{self.k}]"


def sequence_norm(v: GridVector, nm: SequenceNorm) -> Real:
    """
    Norm of the row-1 coordinates of ``v``.

    Exact (a Fraction) for ell^1, c0 and s on rational vectors. Raises NotInEmbeddedYError when
    the support meets a summand other than the first one.
    """
    rows = v.support_summands()
    if any(i != 1 for i in rows):
        raise NotInEmbeddedYError(rows)
    moduli = [(j, abs(c)) for (_, j), c in v]
    if nm.kind == "c0":
        return max((m for _, m in moduli), default=0)
    if nm.kind == "s":
        return sum((m * j**nm.k for j, m in moduli), 0)
    if nm.p == 1:
        return sum((m for _, m in moduli), 0)
    return sum(float(m) ** nm.p for _, m in moduli) ** (1 / nm.p)


class SequenceSpaceProfile:
    """
    Seminorm profile of the snake scenarios: constant ``||.||`` for ell^p and c0 (Banach
    spaces), ``(||.||_0, ..., ||.||_{horizon-1})`` for s.
    """

    def __init__(self, norm: SequenceNorm, horizon: int):
        if horizon < 1:
            raise ValueError(f"horizon must be >= 1, got {horizon}")
        self.norm = norm
        self.horizon = horizon

    def __call__(self, v: GridVector) -> tuple[Real, ...]:
        if self.norm.kind == "s":
            return tuple(sequence_norm(v, SequenceNorm.s(n)) for n in range(self.horizon))
        value = sequence_norm(v, self.norm)
        return (value,) * self.horizon

    def describe(self) -> dict:
        return {"seminorms": "sequence norms", "kind": self.norm.label, "horizon": self.horizon}
