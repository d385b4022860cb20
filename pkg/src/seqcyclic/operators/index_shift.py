from __future__ import annotations

from fractions import Fraction
from typing import Any

from seqcyclic.spaces.grid_vector import GridVector


class IndexShift:
    """
    Index-level weighted backward shift on a single row: e_t is stored at (1, t + 1), and
    ``T e_t = lam e_{t-1}``, ``T e_0 = 0``, ``S e_t = lam**-1 e_{t+1}``.

    Pure column arithmetic, independent of any enumeration, so it serves as an oracle for the
    snake shift. Any ``lam > 0`` is accepted; ``lam <= 1`` gives the negative controls.
    """

    name = "index-shift"

    def __init__(self, lam: Fraction | float = Fraction(2), length: int | None = None):
        if not lam > 0:
            raise ValueError(f"lambda must be > 0, got {lam}")
        self.lam = lam
        self.length = length

    def power(self, v: GridVector, n: int) -> GridVector:
        if n < 0:
            raise ValueError(f"n must be >= 0, got {n}")
        self._check_row(v)
        if n == 0:
            return v
        weight = self.lam**n
        return GridVector({(1, j - n): c * weight for (_, j), c in v if j > n})

    def right_inverse(self, v: GridVector, n: int) -> GridVector:
        if n < 0:
            raise ValueError(f"n must be >= 0, got {n}")
        self._check_row(v)
        if n == 0:
            return v
        lam = Fraction(self.lam) if isinstance(self.lam, int) else self.lam
        weight = lam**-n
        return GridVector({(1, j + n): c * weight for (_, j), c in v})

    def transport(self, v: GridVector, a: int, b: int) -> GridVector:
        """T^a S_b v as a single shift by b - a with weight lam**(a - b)."""
        if a < 0 or b < 0:
            raise ValueError(f"powers must be >= 0, got ({a}, {b})")
        self._check_row(v)
        if a == b:
            return v
        lam = Fraction(self.lam) if isinstance(self.lam, int) else self.lam
        weight = lam ** (a - b)
        return GridVector({(1, j + b - a): c * weight for (_, j), c in v if j + b > a})

    def describe(self) -> dict[str, Any]:
        return {"operator": self.name, "lambda": str(self.lam), "length": self.length}

    @staticmethod
    def _check_row(v: GridVector) -> None:
        if not v.in_first_summand():
            raise ValueError("the index-level shift acts on row 1 only")


def basis_vector(t: int, coefficient: Any = 1) -> GridVector:
    """e_t of the index-level shift."""
    if t < 0:
        raise ValueError(f"indices are >= 0, got {t}")
    return GridVector.basis(1, t + 1, coefficient)
