from __future__ import annotations

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from seqcyclic.criterion.scenario_spec import ScenarioSpec
    from seqcyclic.results.result_types import ConditionReport


class CriterionAction(ABC):
    """
    Represents a user-defined or built-in action run after the criterion checks.

    A CriterionAction encapsulates behavior to be executed by
    `run_criterion` depending on whether checks pass or fail.

    Each action must implement the `run()` method, which receives
    the scenario, the reports of the condition checks, and optional
    keyword arguments.
    """

    @abstractmethod
    def run(self, scenario: ScenarioSpec, reports: list[ConditionReport], **kwargs) -> Any:
        """
        Execute the action.

        Parameters
        ----------
        scenario : ScenarioSpec
            The scenario the checks ran on.
        reports : list[ConditionReport]
            The reports of the condition checks evaluated before the action.
        **kwargs
            Additional keyword arguments forwarded by `run_criterion`
            (for example, the number of summands N).

        Returns
        -------
        Any
            A result record (e.g. a HypercyclicVectorResult), or None for actions such as
            logging.
        """
        ...
