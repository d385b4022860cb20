"""
Concrete enumerations of the countable dense sets the criterion runs over.

Both enumerations are ordered by a height: the height of a rational p/q in lowest terms is
max(|p|, q), and every object of height h comes before every object of height h + 1. Each
height stage is finite, so every rational polynomial (grid vector) appears at a finite index.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import TYPE_CHECKING, Generic, TypeVar

from seqcyclic.spaces.dyadic import DyadicPolynomial
from seqcyclic.spaces.grid_vector import GridVector

if TYPE_CHECKING:
    from collections.abc import Callable, Iterator

#: id recorded in reports for the enumeration order below
ENUMERATION_ID = "height-v1"

T = TypeVar("T")


def rational_height(q: Fraction) -> int:
    q = Fraction(q)
    return max(abs(q.numerator), q.denominator)


def _rational_key(q: Fraction) -> tuple:
    return (rational_height(q), abs(q), q < 0)


def rationals_up_to(height: int, include_zero: bool = False) -> list[Fraction]:
    """All rationals of height <= ``height`` ordered by (height, modulus, sign)."""
    values = {
        Fraction(p, q)
        for q in range(1, height + 1)
        for p in range(-height, height + 1)
        if p != 0
    }
    ordered = sorted(values, key=_rational_key)
    return [Fraction(0), *ordered] if include_zero else ordered


def _canonical(q: Fraction) -> int | Fraction:
    return q.numerator if q.denominator == 1 else q


def dense_polynomials() -> Iterator[DyadicPolynomial]:
    """
    Every nonzero polynomial with rational coefficients, once each.

    Height of ``a_0 + ... + a_d z**d`` is max(d + 1, height of the a_i); inside a stage the
    order is degree, then coefficients lexicographically by the rational order. p_1 = 1.
    """
    for h in itertools.count(1):
        coefficients = rationals_up_to(h, include_zero=True)
        leading = coefficients[1:]
        for degree in range(h):
            for lower in itertools.product(coefficients, repeat=degree):
                for top in leading:
                    values = (*lower, top)
                    height = max(degree + 1, *(rational_height(a) for a in values))
                    if height == h:
                        yield DyadicPolynomial.from_coefficients(
                            [_canonical(a) for a in values]
                        )


def analytic_dense_vectors() -> Iterator[DyadicPolynomial]:
    """x_n = z (1 - z) p_n; x_1 = z - z**2."""
    factor = DyadicPolynomial({1: 1, 2: -1})
    for p in dense_polynomials():
        yield factor * p


def dense_grid_targets() -> Iterator[GridVector]:
    """
    Every nonzero finite-support rational grid vector, once each.

    Height is max(largest row, largest column, support size, coefficient heights); inside a
    stage the order is support size, then the coefficient tuple, then the support (row-major).
    The k-th vector has coefficient moduli at most k. x_1 = e_11, x_2 = -e_11, x_3 = e_12.
    """
    for h in itertools.count(1):
        positions = [(i, j) for i in range(1, h + 1) for j in range(1, h + 1)]
        coefficients = rationals_up_to(h)
        for size in range(1, h + 1):
            for values in itertools.product(coefficients, repeat=size):
                coefficient_height = max(rational_height(a) for a in values)
                for support in itertools.combinations(positions, size):
                    corner = max(max(i, j) for i, j in support)
                    if max(corner, size, coefficient_height) == h:
                        yield GridVector(
                            (p, _canonical(a)) for p, a in zip(support, values)
                        )


def oracle_targets(length: int) -> Iterator[GridVector]:
    """e_0, ..., e_{length-1} of the index-level shift, repeated with weights 1, 1/2, 1/3, ..."""
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    for r in itertools.count(0):
        for t in range(length):
            yield GridVector.basis(1, t + 1, _canonical(Fraction(1, r + 1)))


class IndexedFamily(Generic[T]):
    """
    A lazily materialized sequence x_1, x_2, ... over a generator factory; values are cached so
    repeated lookups are cheap and every caller sees the same vectors.
    """

    def __init__(self, factory: Callable[[], Iterator[T]], enumeration_id: str = ENUMERATION_ID):
        self.factory = factory
        self.enumeration_id = enumeration_id
        self._source = factory()
        self._cache: list[T] = []

    def __call__(self, k: int) -> T:
        if k < 1:
            raise ValueError(f"dense family indices start at 1, got {k}")
        while len(self._cache) < k:
            self._cache.append(next(self._source))
        return self._cache[k - 1]

    def prefix(self, count: int) -> list[T]:
        if count > 0:
            self(count)
        return list(self._cache[:count])

    def index_of(self, value: T, limit: int) -> int | None:
        """1-based position of ``value`` among the first ``limit`` members, None if absent."""
        for k in range(1, limit + 1):
            if self(k) == value:
                return k
        return None
