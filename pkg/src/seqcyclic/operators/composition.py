from __future__ import annotations

from typing import TYPE_CHECKING, Any

import numpy as np

if TYPE_CHECKING:
    from collections.abc import Sequence

    from seqcyclic.spaces.dyadic import DyadicPolynomial


def compose_square(f: DyadicPolynomial) -> DyadicPolynomial:
    """C_phi f = f(z**2): every exponent q becomes 2q."""
    return f.rescaled(1)


def compose_gamma(f: DyadicPolynomial, n: int) -> DyadicPolynomial:
    """C_{gamma_n} f with gamma_n(z) = exp(2**-n Log z): every exponent q becomes q / 2**n."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return f.rescaled(-n)


def agree_on_unit_interval(
    f: DyadicPolynomial, g: DyadicPolynomial, points: Sequence[float] | None = None
) -> bool:
    """
    True when f and g take identical values on a sample of ]0, 1[ (default: 999 equispaced
    points). Used to check identities like T^k S_k f = f pointwise as well as structurally.
    """
    sample = np.linspace(0.001, 0.999, 999) if points is None else np.asarray(points, dtype=float)
    if np.any((sample <= 0) | (sample >= 1)):
        raise ValueError("sample points must lie in ]0, 1[")
    return bool(np.array_equal(f.evaluate_many(sample), g.evaluate_many(sample)))


class CompositionSquare:
    """
    Example operator pair on dyadic polynomials: T = C_{z^2} and S_n = C_{gamma_n}.

    Both act term-wise on exponents, so T^n S_n f = f holds structurally for every f.
    """

    name = "composition-z2"

    def power(self, v: DyadicPolynomial, n: int) -> DyadicPolynomial:
        if n < 0:
            raise ValueError(f"n must be >= 0, got {n}")
        return v.rescaled(n)

    def right_inverse(self, v: DyadicPolynomial, n: int) -> DyadicPolynomial:
        return compose_gamma(v, n)

    def transport(self, v: DyadicPolynomial, a: int, b: int) -> DyadicPolynomial:
        if a < 0 or b < 0:
            raise ValueError(f"powers must be >= 0, got ({a}, {b})")
        return v.rescaled(a - b)

    def describe(self) -> dict[str, Any]:
        return {"operator": self.name, "T": "f -> f(z^2)", "S_n": "f -> f(exp(2^-n Log z))"}
