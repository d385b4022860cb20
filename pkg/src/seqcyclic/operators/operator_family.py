from __future__ import annotations

from typing import Any, Protocol, TypeVar

V = TypeVar("V")


class OperatorFamily(Protocol[V]):
    """
    I represent a pair (T, (S_n)_n): a continuous linear operator T together with the right
    inverse maps S_n used by the criterion. All implementations are polymorphic.
    """

    @property
    def name(self) -> str:
        """
        Returns:
            str: a short identifier used in reports (e.g. ``"composition-z2"``).
        """
        ...

    def power(self, v: V, n: int) -> V:
        """
        Returns:
            T^n v; ``n = 0`` returns ``v`` unchanged.
        """
        ...

    def right_inverse(self, v: V, n: int) -> V:
        """
        Returns:
            S_n v; ``n = 0`` is the identity (the convention n_0 = 0).
        """
        ...

    def transport(self, v: V, a: int, b: int) -> V:
        """
        Returns:
            T^a S_b v, replayed as one net step where the operator allows it, so that no
            intermediate weight over- or underflows.
        """
        ...

    def describe(self) -> dict[str, Any]:
        """
        Returns:
            dict: provenance of the operator (parameters, schedules) for reports.
        """
        ...
