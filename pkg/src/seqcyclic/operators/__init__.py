from .composition import CompositionSquare, agree_on_unit_interval, compose_gamma, compose_square
from .index_shift import IndexShift, basis_vector
from .operator_family import OperatorFamily
from .snake import (
    ScheduleEntry,
    ShiftParams,
    SnakeEnumeration,
    SnakeShift,
    build_snake_enumeration,
    snake_apply_S,
    snake_apply_T,
    snake_transport,
    transported_block,
)

__all__ = [
    "OperatorFamily",
    "CompositionSquare",
    "agree_on_unit_interval",
    "compose_gamma",
    "compose_square",
    "IndexShift",
    "basis_vector",
    "ScheduleEntry",
    "ShiftParams",
    "SnakeEnumeration",
    "SnakeShift",
    "build_snake_enumeration",
    "snake_apply_S",
    "snake_apply_T",
    "snake_transport",
    "transported_block",
]
