from __future__ import annotations


class SeqcyclicError(Exception):
    """Base class of every error raised on purpose by seqcyclic."""


class DomainError(SeqcyclicError, ValueError):
    """A point lies outside the domain of the principal branch of the logarithm."""


class NotInEmbeddedYError(SeqcyclicError, ValueError):
    """A grid vector has support outside the first summand (the embedded copy of Y)."""

    def __init__(self, rows: list[int]):
        self.rows = rows
        super().__init__(f"not in embedded Y: support meets summands {rows}")


class HorizonError(SeqcyclicError, IndexError):
    """An index goes beyond what was materialized (seminorm horizon, built schedule)."""


class EnumerationTooShortError(SeqcyclicError, LookupError):
    def __init__(self, position: tuple[int, int]):
        self.position = position
        super().__init__(f"enumeration too short: position {position} is not enumerated")


class ScheduleError(SeqcyclicError):
    """The snake builder could not schedule target ``k``."""

    def __init__(self, k: int, reason: str):
        self.k = k
        self.reason = reason
        super().__init__(f"cannot schedule target k={k}: {reason}")


class SelectionError(SeqcyclicError):
    """Greedy subsequence selection ran out of base schedule while choosing index ``k``."""

    def __init__(self, k: int, reason: str):
        self.k = k
        self.reason = reason
        super().__init__(f"cannot select n_{k}: {reason}")


class ConfigError(SeqcyclicError, ValueError):
    def __init__(self, message: str, field: str | None = None, line: int | None = None):
        self.field = field
        self.line = line
        where = []
        if field is not None:
            where.append(f"field '{field}'")
        if line is not None:
            where.append(f"line {line}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(f"{prefix}{message}")


class ConstructionError(SeqcyclicError):
    """A summand S_{n_j} x_j of the hypercyclic vector is not in Y."""

    def __init__(self, j: int, reason: str):
        self.j = j
        self.reason = reason
        super().__init__(f"summand j={j}: {reason}")
