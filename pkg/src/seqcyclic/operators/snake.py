"""
The snake shift: a lambda-weighted backward shift along a path through the grid N x N that
ends at the sink (1, 1).

The path q(0), q(1), ... is built once per target list by :func:`build_snake_enumeration`;
the bijection f is then ``f(q(t)) = q(t - 1)`` and

    T e_{q(t)} = lambda e_{q(t-1)},  T e_{1,1} = 0,  S e_{q(t)} = lambda**-1 e_{q(t+1)}.

Beyond the built prefix the path continues along summand 1 from the first unused column.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import TYPE_CHECKING, Any, Literal

from seqcyclic.errors import EnumerationTooShortError, HorizonError, ScheduleError
from seqcyclic.spaces.grid_vector import GridVector

if TYPE_CHECKING:
    from collections.abc import Iterator, Mapping, Sequence

    from seqcyclic.spaces.grid_vector import Position, Scalar
    from seqcyclic.spaces.sequence_norms import SequenceKind

logger = logging.getLogger(__name__)

Coverage = Literal["full", "minimal"]

#: n_k <= QUADRATIC_BUDGET * k**2 is enforced for the space s
QUADRATIC_BUDGET = 3


@dataclass(frozen=True)
class ShiftParams:
    """
    Parameters of the snake shift.

    Attributes:
        lam: the weight lambda, strictly greater than 1. Use a Fraction for exact replays.
        space_kind: the sequence space Y the shift is studied on.
        growth_budget: c in ``n_k <= c * k**2``; defaults to 3 for the space s, None (no
            budget) otherwise.
    """

    lam: Fraction | float = Fraction(2)
    space_kind: SequenceKind = "ellp"
    growth_budget: float | None = None

    def __post_init__(self):
        if not self.lam > 1:
            raise ValueError(f"lambda must be > 1, got {self.lam}")
        if self.space_kind == "s" and self.growth_budget is None:
            object.__setattr__(self, "growth_budget", QUADRATIC_BUDGET)
        if self.growth_budget is not None and self.growth_budget <= 0:
            raise ValueError(f"growth_budget must be positive, got {self.growth_budget}")

    @property
    def exact(self) -> bool:
        return isinstance(self.lam, (int, Fraction))


@dataclass(frozen=True)
class ScheduleEntry:
    """Schedule of target k: launchpad columns m..n of row 1, shift length l, window start s."""

    k: int
    m: int
    n: int
    l: int  # noqa: E741
    s: int

    @property
    def t(self) -> int:
        """Path index of (1, m)."""
        return self.s + self.l

    @property
    def window(self) -> int:
        return self.n - self.m


@dataclass(frozen=True, eq=False)
class SnakeEnumeration:
    """
    An immutable enumeration prefix with its per-target schedules. Safe to share between readers.
    """

    path: tuple[Position, ...]
    inverse: Mapping[Position, int]
    frontier: int
    schedules: tuple[ScheduleEntry, ...]
    targets: tuple[GridVector, ...]
    params: ShiftParams
    coverage: Coverage = "full"

    def position(self, t: int) -> Position:
        """q(t); indices past the prefix continue along row 1 from the frontier."""
        if t < 0:
            raise ValueError(f"path indices are >= 0, got {t}")
        if t < len(self.path):
            return self.path[t]
        return (1, self.frontier + t - len(self.path))

    def index_of(self, position: Position) -> int:
        found = self.inverse.get(position)
        if found is not None:
            return found
        i, j = position
        if i == 1 and j >= self.frontier:
            return len(self.path) + j - self.frontier
        raise EnumerationTooShortError(position)

    def f(self, position: Position) -> Position:
        """The bijection f of N x N minus (1, 1) onto N x N."""
        t = self.index_of(position)
        if t == 0:
            raise ValueError("f is undefined at the sink (1, 1)")
        return self.position(t - 1)

    def schedule(self, k: int) -> ScheduleEntry:
        if not 1 <= k <= len(self.schedules):
            raise HorizonError(f"no schedule for target k={k} (built {len(self.schedules)})")
        return self.schedules[k - 1]

    def l(self, k: int) -> int:  # noqa: E743
        """l_k, with l_0 = 0."""
        return 0 if k == 0 else self.schedule(k).l

    def exponent_schedule(self) -> tuple[int, ...]:
        """(n_0, n_1, ...) = (0, l_1, l_2, ...)."""
        return (0, *(e.l for e in self.schedules))

    def target(self, k: int) -> GridVector:
        if not 1 <= k <= len(self.targets):
            raise HorizonError(f"no target x_{k} (built {len(self.targets)})")
        return self.targets[k - 1]

    def block(self, k: int) -> GridVector:
        """
        ``sum_{j=m_k}^{n_k} lambda**-l_k alpha_j e_{1,j}``, the launchpad block that T^{l_k}
        carries onto x_k.
        """
        entry = self.schedule(k)
        x = self.target(k)
        coefficients = {}
        for r in range(entry.window + 1):
            alpha = x[self.position(entry.s + r)]
            if alpha != 0:
                coefficients[entry.m + r] = _weighted(alpha, self.params.lam, -entry.l)
        return GridVector.first_row(coefficients)

    def dump(self) -> str:
        """Deterministic text form: ``t i j`` lines, then a ``k m_k n_k l_k`` table."""
        lines = ["# path: t i j"]
        lines.extend(f"{t} {i} {j}" for t, (i, j) in enumerate(self.path))
        lines.append("# schedules: k m_k n_k l_k")
        lines.extend(f"{e.k} {e.m} {e.n} {e.l}" for e in self.schedules)
        return "\n".join(lines) + "\n"

    def schedule_table(self) -> list[dict[str, int]]:
        return [{"k": e.k, "m": e.m, "n": e.n, "l": e.l} for e in self.schedules]


def _weighted(c: Scalar, lam: Fraction | float, n: int) -> Scalar:
    """c * lam**n, staying exact for rationals and avoiding float overflow otherwise."""
    if n == 0:
        return c
    if isinstance(c, (int, Fraction)) and isinstance(lam, (int, Fraction)):
        return c * Fraction(lam) ** n
    log_modulus = math.log(abs(c)) + n * math.log(lam)
    modulus = math.exp(log_modulus) if log_modulus < 709 else math.inf
    return modulus * (c / abs(c))


def snake_apply_T(
    v: GridVector, e: SnakeEnumeration, params: ShiftParams, n: int = 1
) -> GridVector:
    """
    T^n v: the coefficient at q(t) moves to q(t - n) times lambda**n; coefficients with t < n
    pass the sink and vanish.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return v
    moved = []
    for position, c in v:
        t = e.index_of(position)
        if t >= n:
            moved.append((e.position(t - n), _weighted(c, params.lam, n)))
    return GridVector(moved)


def snake_apply_S(
    v: GridVector, e: SnakeEnumeration, params: ShiftParams, n: int = 1
) -> GridVector:
    """S^n v: the coefficient at q(t) moves to q(t + n) times lambda**-n."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return v
    return GridVector(
        (e.position(e.index_of(position) + n), _weighted(c, params.lam, -n)) for position, c in v
    )


def snake_transport(
    v: GridVector, e: SnakeEnumeration, params: ShiftParams, a: int, b: int
) -> GridVector:
    """
    T^a S^b v as one net shift: the coefficient at q(t) moves to q(t + b - a) times
    lambda**(a - b) and vanishes when t + b < a.

    Equal to ``snake_apply_T(snake_apply_S(v, e, params, b), e, params, a)``; in float mode
    the intermediate weight lambda**-b may underflow while the net weight does not.
    """
    if a < 0 or b < 0:
        raise ValueError(f"powers must be >= 0, got ({a}, {b})")
    moved = []
    for position, c in v:
        t = e.index_of(position) + b
        if t >= a:
            moved.append((e.position(t - a), _weighted(c, params.lam, a - b)))
    return GridVector(moved)


def transported_block(
    i: int, j: int, k: int, e: SnakeEnumeration, params: ShiftParams
) -> GridVector:
    """
    T^{l_j} S^{l_k} x_i by replay.

    For k > i + j the result is supported in row 1 with coefficient moduli at most
    ``i * lambda**-(l_k - l_j)``; a violation raises ScheduleError.
    """
    x = e.target(i)
    lj, lk = e.l(j), e.l(k)
    result = snake_transport(x, e, params, lj, lk)
    if k > i + j:
        if not result.in_first_summand():
            raise ScheduleError(k, f"T^l_{j} S^l_{k} x_{i} leaves summand 1")
        bound = _weighted(i, params.lam, -(lk - lj))
        if result.max_abs() > bound:
            raise ScheduleError(k, f"T^l_{j} S^l_{k} x_{i} exceeds coefficient bound {bound}")
    return result


def _diagonal_sweep() -> Iterator[Position]:
    """Cells of rows >= 2 by increasing i + j, then increasing i."""
    d = 3
    while True:
        for i in range(2, d):
            yield (i, d - i)
        d += 1


class _SnakeBuilder:
    def __init__(self, targets: Sequence[GridVector], params: ShiftParams, coverage: Coverage):
        if coverage not in ("full", "minimal"):
            raise ValueError(f"unknown coverage policy: {coverage}")
        self.targets = tuple(targets)
        self.params = params
        self.coverage = coverage
        self.path: list[Position] = [(1, 1)]
        self.inverse: dict[Position, int] = {(1, 1): 0}
        self.reserved = {p for x in self.targets for p in x.support()} - {(1, 1)}
        self.claimed: set[int] = set()
        self.row_cursor = 2
        self.fillers = _diagonal_sweep()
        self.support_indices: list[list[int]] = []
        self.schedules: list[ScheduleEntry] = []

    def build(self) -> SnakeEnumeration:
        for k, x in enumerate(self.targets, start=1):
            entry = self._schedule_target(k, x)
            self.schedules.append(entry)
            logger.debug("target %d: m=%d n=%d l=%d path=%d", k, entry.m, entry.n, entry.l,
                         len(self.path))
        frontier = 1 + max(j for i, j in self.path if i == 1)
        logger.info("snake enumeration: %d targets, path length %d", len(self.targets),
                    len(self.path))
        return SnakeEnumeration(
            path=tuple(self.path),
            inverse=MappingProxyType(dict(self.inverse)),
            frontier=frontier,
            schedules=tuple(self.schedules),
            targets=self.targets,
            params=self.params,
            coverage=self.coverage,
        )

    def _schedule_target(self, k: int, x: GridVector) -> ScheduleEntry:
        if x.is_zero():
            raise ScheduleError(k, "target is zero")
        if x.max_abs() > k:
            raise ScheduleError(k, f"coefficient modulus {x.max_abs()} exceeds {k}")
        for position in x.support():
            if position not in self.inverse:
                self.reserved.discard(position)
                self._append(position)
        idxs = [self.inverse[p] for p in x.support()]
        self.support_indices.append(idxs)

        s = min(idxs)
        window = max(idxs) - s
        previous_l = [0, *(e.l for e in self.schedules)]
        l = previous_l[-1] + len(self.path) + 1  # noqa: E741
        t = s + l

        required = set(range(t, t + window + 1))
        for lp in previous_l[1:]:
            required.update(idx + l - lp for idx in idxs)
        for i, earlier in enumerate(self.support_indices[:-1], start=1):
            js = range(k) if self.coverage == "full" else range(k - i)
            for j in js:
                required.update(idx + l - previous_l[j] for idx in earlier)

        lower = self.schedules[-1].n + 1 if self.schedules else 1
        m = self._claim_launchpad(window, lower)
        n = m + window
        budget = self.params.growth_budget
        if budget is not None and n > budget * k * k:
            raise ScheduleError(k, f"n_k = {n} exceeds the budget {budget}*k^2 = {budget * k * k}")

        for idx in range(len(self.path), max(required) + 1):
            if t <= idx <= t + window:
                column = m + idx - t
                self.claimed.discard(column)
                self._append((1, column))
            elif idx in required:
                self._append((1, self._next_row1_column()))
            else:
                self._append(self._next_filler())
        return ScheduleEntry(k=k, m=m, n=n, l=l, s=s)

    def _append(self, position: Position) -> None:
        self.inverse[position] = len(self.path)
        self.path.append(position)

    def _row1_free(self, column: int) -> bool:
        cell = (1, column)
        return cell not in self.inverse and cell not in self.reserved and column not in self.claimed

    def _claim_launchpad(self, window: int, lower: int) -> int:
        c = max(self.row_cursor, lower)
        while not all(self._row1_free(c + r) for r in range(window + 1)):
            c += 1
        self.claimed.update(range(c, c + window + 1))
        return c

    def _next_row1_column(self) -> int:
        while not self._row1_free(self.row_cursor):
            self.row_cursor += 1
        return self.row_cursor

    def _next_filler(self) -> Position:
        for cell in self.fillers:
            if cell not in self.inverse and cell not in self.reserved:
                return cell
        raise AssertionError("unreachable: the diagonal sweep is infinite")


def build_snake_enumeration(
    targets: Sequence[GridVector], params: ShiftParams, coverage: Coverage = "full"
) -> SnakeEnumeration:
    """
    Build the enumeration prefix and schedules (m_k, n_k, l_k) for ``targets``.

    For every target k the path first runs through the unvisited support cells of x_k
    (row-major), then l_k = l_{k-1} + (path length) + 1 and the launchpad (1, m_k)..(1, n_k)
    is laid at path indices t_k..t_k + (n_k - m_k) with t_k - l_k the first support index.
    Path indices that S-transports of earlier targets reach are laid on row 1 too: with
    ``coverage="minimal"`` those of T^{l_j} S^{l_k} x_i for i + j < k, with ``"full"`` those for
    all i, j < k. Everything else is filled by a diagonal sweep over rows >= 2.

    Raises:
        ScheduleError: zero target, a coefficient of x_k above k, or n_k over the budget.
    """
    return _SnakeBuilder(targets, params, coverage).build()


class SnakeShift:
    """OperatorFamily of the snake shift over a built enumeration."""

    name = "snake-shift"

    def __init__(self, enumeration: SnakeEnumeration):
        self.enumeration = enumeration
        self.params = enumeration.params

    def power(self, v: GridVector, n: int) -> GridVector:
        return snake_apply_T(v, self.enumeration, self.params, n)

    def right_inverse(self, v: GridVector, n: int) -> GridVector:
        return snake_apply_S(v, self.enumeration, self.params, n)

    def transport(self, v: GridVector, a: int, b: int) -> GridVector:
        return snake_transport(v, self.enumeration, self.params, a, b)

    def describe(self) -> dict[str, Any]:
        return {
            "operator": self.name,
            "lambda": str(self.params.lam),
            "space": self.params.space_kind,
            "coverage": self.enumeration.coverage,
            "path_length": len(self.enumeration.path),
            "frontier": self.enumeration.frontier,
            "schedules": self.enumeration.schedule_table(),
        }
