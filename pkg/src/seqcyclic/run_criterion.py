from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from collections.abc import Sequence

    from seqcyclic.actions.criterion_action import CriterionAction
    from seqcyclic.checks.condition_check import ConditionCheck
    from seqcyclic.criterion.scenario_spec import ScenarioSpec
    from seqcyclic.results.result_types import ConditionReport, CriterionResult

logger = logging.getLogger(__name__)


def run_criterion(
    scenario: ScenarioSpec,
    checks: Sequence[ConditionCheck],
    on_pass: CriterionAction,
    on_fail: CriterionAction,
    **kwargs: Any,
) -> CriterionResult:
    """
    Evaluates a set of condition checks on the given scenario and executes the appropriate
    action depending on whether all checks pass or any check fails.

    Args:
        scenario: The scenario whose operator, dense family and schedule are checked.
        checks: The condition checks to perform.
        on_pass: Action to execute if all checks succeed. Must implement
            `run(scenario, reports, **kwargs)`.
        on_fail: Action to execute if any check fails. Same contract as `on_pass`.
        **kwargs: Additional keyword arguments forwarded to the actions.

    Returns:
        CriterionResult: the list of condition reports and, if applicable, the result
            produced by the action.
    """

    reports: list[ConditionReport] = []
    passed = True

    for check in checks:
        result = check.check(scenario)
        reports.append(result["report"])
        if not result["passed"]:
            passed = False

    logger.info("criterion on %s: %s", scenario.kind, "pass" if passed else "fail")
    if passed:
        action_result = on_pass.run(scenario, reports, **kwargs)
    else:
        action_result = on_fail.run(scenario, reports, **kwargs)

    return {
        "condition": "pass" if passed else "fail",
        "reports": reports,
        "action_result": action_result,
    }
