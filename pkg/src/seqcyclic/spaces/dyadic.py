from __future__ import annotations

import cmath
import math
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from numbers import Number
from types import MappingProxyType
from typing import TYPE_CHECKING, Union

import numpy as np

from seqcyclic.errors import DomainError

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

Scalar = Union[int, Fraction, float, complex]
ExponentLike = Union["DyadicExponent", int, Fraction, str]

# exp(x) underflows to 0.0 below this
_EXP_UNDERFLOW = -745.0


@total_ordering
@dataclass(frozen=True)
class DyadicExponent:
    """
    A nonnegative dyadic rational ``numerator / 2**scale``.

    The constructor canonicalizes: the stored numerator is odd (or zero with scale 0), so equal
    values compare and hash equal. A negative scale multiplies by ``2**-scale``.
    """

    numerator: int
    scale: int = 0

    def __post_init__(self):
        if self.numerator < 0:
            raise ValueError(f"dyadic exponents are nonnegative, got numerator {self.numerator}")
        numerator, scale = self.numerator, self.scale
        if numerator == 0:
            scale = 0
        else:
            trailing = (numerator & -numerator).bit_length() - 1
            numerator >>= trailing
            scale -= trailing
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "scale", scale)

    @classmethod
    def of(cls, value: ExponentLike) -> DyadicExponent:
        if isinstance(value, DyadicExponent):
            return value
        fraction = Fraction(value)
        denominator = fraction.denominator
        if denominator & (denominator - 1):
            raise ValueError(f"{value} is not a dyadic rational")
        return cls(fraction.numerator, denominator.bit_length() - 1)

    @property
    def value(self) -> Fraction:
        if self.scale >= 0:
            return Fraction(self.numerator, 1 << self.scale)
        return Fraction(self.numerator << -self.scale)

    def is_zero(self) -> bool:
        return self.numerator == 0

    def shifted(self, k: int) -> DyadicExponent:
        """The exponent times ``2**k`` (k may be negative)."""
        if self.numerator == 0:
            return self
        return DyadicExponent(self.numerator, self.scale - k)

    def __add__(self, other: DyadicExponent) -> DyadicExponent:
        return DyadicExponent.of(self.value + other.value)

    def __float__(self) -> float:
        try:
            return math.ldexp(self.numerator, -self.scale)
        except OverflowError:
            return math.inf

    def __lt__(self, other: DyadicExponent) -> bool:
        return self.value < other.value

    def __str__(self) -> str:
        return str(self.value)


class DyadicPolynomial:
    """
    A finite sum of terms ``c * z**q`` with nonnegative dyadic exponents ``q``.

    Values are immutable; zero coefficients are never stored. Evaluation uses the principal
    branch ``z**q = exp(q * Log z)`` on the plane minus the ray (-inf, 0), with ``0**q = 0``
    for ``q > 0`` and ``0**0 = 1``.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[ExponentLike, Scalar] | Iterable[tuple] | None = None):
        collected: dict[DyadicExponent, Scalar] = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for exponent, coefficient in items:
            q = DyadicExponent.of(exponent)
            collected[q] = collected.get(q, 0) + coefficient
        self._terms = MappingProxyType({q: c for q, c in sorted(collected.items()) if c != 0})

    @classmethod
    def constant(cls, coefficient: Scalar) -> DyadicPolynomial:
        return cls({0: coefficient})

    @classmethod
    def from_coefficients(cls, coefficients: Sequence[Scalar]) -> DyadicPolynomial:
        """An ordinary polynomial ``sum(a_i * z**i)``."""
        return cls({i: a for i, a in enumerate(coefficients)})

    @property
    def terms(self) -> Mapping[DyadicExponent, Scalar]:
        return self._terms

    def exponents(self) -> list[DyadicExponent]:
        return list(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def rescaled(self, k: int) -> DyadicPolynomial:
        """Replace every exponent ``q`` by ``q * 2**k``; this is composition with z**(2**k)."""
        return DyadicPolynomial({q.shifted(k): c for q, c in self._terms.items()})

    def coefficient_bound(self, radius: float) -> float:
        """``sum |c_q| R**q``, an upper bound of the modulus on the closed disk of radius R."""
        return sum(abs(complex(c)) * radius ** float(q) for q, c in self._terms.items())

    def evaluate(self, z: complex) -> complex:
        z = complex(z)
        _check_domain(z)
        log_z = cmath.log(z) if z != 0 else None
        total = 0j
        for q, c in self._terms.items():
            total += complex(c) * _scalar_power(z, log_z, q)
        return total

    def evaluate_many(self, points: np.ndarray | Sequence[complex]) -> np.ndarray:
        z = np.asarray(points, dtype=complex)
        if np.any((z.imag == 0) & (z.real < 0)):
            raise DomainError("evaluation point on the excluded ray (-inf, 0)")
        out = np.zeros(z.shape, dtype=complex)
        at_zero = z == 0
        log_z = np.log(np.where(at_zero, 1, z))
        with np.errstate(all="ignore"):
            for q, c in self._terms.items():
                if q.is_zero():
                    out += complex(c)
                    continue
                qf = float(q)
                re = qf * log_z.real
                im = qf * log_z.imag
                vanish = at_zero | (re < _EXP_UNDERFLOW)
                if np.isinf(qf) and np.any(~vanish):
                    raise OverflowError(f"z**{q} overflows on points of modulus >= 1")
                value = np.exp(re) * (np.cos(im) + 1j * np.sin(im))
                out += complex(c) * np.where(vanish, 0, value)
        return out

    def __add__(self, other: DyadicPolynomial) -> DyadicPolynomial:
        if not isinstance(other, DyadicPolynomial):
            return NotImplemented
        merged = dict(self._terms)
        for q, c in other._terms.items():
            merged[q] = merged.get(q, 0) + c
        return DyadicPolynomial(merged)

    def __neg__(self) -> DyadicPolynomial:
        return DyadicPolynomial({q: -c for q, c in self._terms.items()})

    def __sub__(self, other: DyadicPolynomial) -> DyadicPolynomial:
        if not isinstance(other, DyadicPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: DyadicPolynomial | Scalar) -> DyadicPolynomial:
        if isinstance(other, DyadicPolynomial):
            product: dict[DyadicExponent, Scalar] = {}
            for q1, c1 in self._terms.items():
                for q2, c2 in other._terms.items():
                    q = q1 + q2
                    product[q] = product.get(q, 0) + c1 * c2
            return DyadicPolynomial(product)
        if isinstance(other, Number):
            return DyadicPolynomial({q: c * other for q, c in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DyadicPolynomial):
            return NotImplemented
        return dict(self._terms) == dict(other._terms)

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "DyadicPolynomial(0)"
        body = " + ".join(f"({c})*z^{q}" for q, c in self._terms.items())
        return f"DyadicPolynomial({body})"


def eval_dyadic_poly(f: DyadicPolynomial, z: complex) -> complex:
    """Evaluate ``f`` at ``z`` on the principal branch; raises DomainError on (-inf, 0)."""
    return f.evaluate(z)


def _check_domain(z: complex) -> None:
    if z.imag == 0 and z.real < 0:
        raise DomainError(f"{z} lies on the excluded ray (-inf, 0)")


def _scalar_power(z: complex, log_z: complex | None, q: DyadicExponent) -> complex:
    if q.is_zero():
        return 1 + 0j
    if log_z is None:
        return 0j
    qf = float(q)
    re = qf * log_z.real
    if re < _EXP_UNDERFLOW:
        return 0j
    if math.isinf(qf):
        raise OverflowError(f"{z}**{q} overflows")
    return cmath.exp(complex(re, qf * log_z.imag))
