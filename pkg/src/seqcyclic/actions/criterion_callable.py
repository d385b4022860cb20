from typing import Any, Callable

from seqcyclic.actions.criterion_action import CriterionAction
from seqcyclic.criterion.scenario_spec import ScenarioSpec
from seqcyclic.results.result_types import ConditionReport


class CriterionCallable(CriterionAction):
    """
    A callable wrapped as CriterionAction

    Attributes:
        callable (Callable[[ScenarioSpec, list[ConditionReport]], Any]):
            the callable to execute
    """

    def __init__(self, callable: Callable[[ScenarioSpec, list[ConditionReport]], Any]):
        self.callable = callable

    def run(self, scenario: ScenarioSpec, reports: list[ConditionReport], **kwargs) -> Any:
        return self.callable(scenario, reports, **kwargs)
