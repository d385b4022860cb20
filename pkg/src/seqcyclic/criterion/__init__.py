from .conditions import check_condition_i, check_condition_ii, check_condition_iii
from .construction import build_partial_hypercyclic_vector, verify_orbit_estimate
from .corollary import (
    check_condition_i_primed,
    check_condition_ii_primed,
    check_condition_iii_primed,
    check_corollary_conditions,
)
from .probe import density_probe
from .scenario_spec import ExponentSchedule, ScenarioSpec
from .selection import select_scenario, select_subsequence

__all__ = [
    "ExponentSchedule",
    "ScenarioSpec",
    "check_condition_i",
    "check_condition_ii",
    "check_condition_iii",
    "check_condition_i_primed",
    "check_condition_ii_primed",
    "check_condition_iii_primed",
    "check_corollary_conditions",
    "build_partial_hypercyclic_vector",
    "verify_orbit_estimate",
    "density_probe",
    "select_scenario",
    "select_subsequence",
]
