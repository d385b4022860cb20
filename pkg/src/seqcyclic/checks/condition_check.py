from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Callable

    from seqcyclic.criterion.scenario_spec import ScenarioSpec
    from seqcyclic.results.result_types import ConditionReport


class ConditionCheck:
    """
    A check built from a condition checker (scenario -> ConditionReport) and a custom
    decision function that maps the report to a boolean.
    """

    def __init__(
        self,
        condition: Callable[[ScenarioSpec], ConditionReport],
        decision_function: Callable[[ConditionReport], bool] = lambda r: r["verdict"] == "pass",
    ):
        self.condition = condition
        self.decision_function = decision_function

    def check(self, scenario: ScenarioSpec, **kwargs) -> dict:
        """
        Run the checker, apply the decision function to its report,
        and return a dict with the outcome and the report.
        """

        report = self.condition(scenario, **kwargs)

        passed = self.decision_function(report)

        return {"passed": passed, "report": report}
