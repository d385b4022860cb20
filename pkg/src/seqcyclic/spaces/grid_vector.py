from __future__ import annotations

from collections.abc import Mapping
from fractions import Fraction
from numbers import Number
from types import MappingProxyType
from typing import TYPE_CHECKING, Union

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator

Scalar = Union[int, Fraction, float, complex]
Position = tuple[int, int]


class GridVector:
    """
    A finitely supported vector of the countable direct sum, indexed by (summand i, coordinate j),
    both starting at 1. Zero coefficients are never stored; values are immutable.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[Position, Scalar] | Iterable[tuple] | None = None):
        collected: dict[Position, Scalar] = {}
        items = entries.items() if isinstance(entries, Mapping) else (entries or ())
        for position, coefficient in items:
            i, j = position
            if i < 1 or j < 1:
                raise ValueError(f"grid positions start at (1, 1), got {position}")
            collected[(i, j)] = collected.get((i, j), 0) + coefficient
        self._entries = MappingProxyType(
            {p: c for p, c in sorted(collected.items()) if c != 0}
        )

    @classmethod
    def basis(cls, i: int, j: int, coefficient: Scalar = 1) -> GridVector:
        """The unit vector e_{i,j} (times ``coefficient``)."""
        return cls({(i, j): coefficient})

    @classmethod
    def first_row(cls, coefficients: Mapping[int, Scalar]) -> GridVector:
        return cls({(1, j): c for j, c in coefficients.items()})

    @property
    def entries(self) -> Mapping[Position, Scalar]:
        return self._entries

    def support(self) -> list[Position]:
        """Support positions in row-major order."""
        return list(self._entries)

    def support_summands(self) -> list[int]:
        return sorted({i for i, _ in self._entries})

    def in_first_summand(self) -> bool:
        return all(i == 1 for i, _ in self._entries)

    def is_zero(self) -> bool:
        return not self._entries

    def max_abs(self) -> Scalar:
        return max((abs(c) for c in self._entries.values()), default=0)

    def is_exact(self) -> bool:
        return all(isinstance(c, (int, Fraction)) for c in self._entries.values())

    def __getitem__(self, position: Position) -> Scalar:
        return self._entries.get(position, 0)

    def __iter__(self) -> Iterator[tuple[Position, Scalar]]:
        return iter(self._entries.items())

    def __len__(self) -> int:
        return len(self._entries)

    def __add__(self, other: GridVector) -> GridVector:
        if not isinstance(other, GridVector):
            return NotImplemented
        merged = dict(self._entries)
        for p, c in other._entries.items():
            merged[p] = merged.get(p, 0) + c
        return GridVector(merged)

    def __neg__(self) -> GridVector:
        return GridVector({p: -c for p, c in self._entries.items()})

    def __sub__(self, other: GridVector) -> GridVector:
        if not isinstance(other, GridVector):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: Scalar) -> GridVector:
        if not isinstance(scalar, Number):
            return NotImplemented
        return GridVector({p: c * scalar for p, c in self._entries.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GridVector):
            return NotImplemented
        return dict(self._entries) == dict(other._entries)

    def __hash__(self) -> int:
        return hash(tuple(self._entries.items()))

    def __repr__(self) -> str:
        if not self._entries:
            return "GridVector(0)"
        body = ", ".join(f"e{p}: {c}" for p, c in self._entries.items())
        return f"GridVector({body})"
