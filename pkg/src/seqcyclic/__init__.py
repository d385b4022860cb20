from .criterion import ExponentSchedule, ScenarioSpec
from .run_criterion import run_criterion
from .scenarios import make_analytic_scenario, make_oracle_shift, make_snake_scenario

__all__ = [
    "ExponentSchedule",
    "ScenarioSpec",
    "make_analytic_scenario",
    "make_oracle_shift",
    "make_snake_scenario",
    "run_criterion",
]
