from .analytic import AnalyticScenarioConfig, make_analytic_scenario
from .config import Command, ScenarioConfig, build_scenario, load_config, parse_command
from .dense_families import (
    ENUMERATION_ID,
    IndexedFamily,
    analytic_dense_vectors,
    dense_grid_targets,
    dense_polynomials,
)
from .oracle import make_oracle_shift
from .snake import SnakeScenarioConfig, make_snake_scenario

__all__ = [
    "AnalyticScenarioConfig",
    "Command",
    "ENUMERATION_ID",
    "IndexedFamily",
    "ScenarioConfig",
    "SnakeScenarioConfig",
    "analytic_dense_vectors",
    "build_scenario",
    "dense_grid_targets",
    "dense_polynomials",
    "load_config",
    "make_analytic_scenario",
    "make_oracle_shift",
    "make_snake_scenario",
    "parse_command",
]
