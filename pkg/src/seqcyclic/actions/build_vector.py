from seqcyclic.actions.criterion_action import CriterionAction
from seqcyclic.criterion.construction import build_partial_hypercyclic_vector
from seqcyclic.criterion.scenario_spec import ScenarioSpec
from seqcyclic.results.result_types import ConditionReport, HypercyclicVectorResult


class BuildVectorAction(CriterionAction):
    """
    Builds the partial hypercyclic vector x_N once the checks passed.

    Attributes:
        N (int): number of summands
    """

    def __init__(self, N: int):
        self.N = N

    def run(
        self, scenario: ScenarioSpec, reports: list[ConditionReport], **kwargs
    ) -> HypercyclicVectorResult:
        return build_partial_hypercyclic_vector(scenario, kwargs.get("N", self.N))
