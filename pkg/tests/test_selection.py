from __future__ import annotations

from fractions import Fraction

import pytest

from seqcyclic.criterion.conditions import (
    check_condition_i,
    check_condition_ii,
    check_condition_iii,
)
from seqcyclic.criterion.selection import select_scenario, select_subsequence
from seqcyclic.errors import SelectionError
from seqcyclic.scenarios.analytic import make_analytic_scenario
from seqcyclic.scenarios.oracle import make_oracle_shift
from seqcyclic.scenarios.snake import SnakeScenarioConfig, make_snake_scenario


def test_snake_schedule_is_already_admissible():
    scenario = make_snake_scenario(SnakeScenarioConfig(target_count=8))
    schedule, indices = select_subsequence(scenario, 6)
    assert indices == list(range(7))
    assert schedule.values == scenario.exponent_schedule.values[:7]


def test_oracle_schedule_is_already_admissible():
    schedule, indices = select_subsequence(make_oracle_shift(20), 5)
    assert indices == [0, 1, 2, 3, 4, 5]
    assert schedule.values == (0, 20, 40, 60, 80, 100)


def test_selected_analytic_scenario_satisfies_the_proposition():
    base = make_analytic_scenario()
    selected = select_scenario(base, 5)
    values = selected.exponent_schedule.values
    assert len(values) == 6
    assert list(values) == sorted(set(values))
    assert selected.provenance["selection"]["rule"] == "greedy-diagonal"
    assert selected.provenance["selection"]["schedule"] == list(values)
    assert selected.provenance["scenario"] == "analytic"
    assert check_condition_i(selected)["verdict"] == "pass"
    assert check_condition_ii(selected, tail_max=5)["verdict"] == "pass"
    assert check_condition_iii(selected)["verdict"] == "pass"


def test_selection_is_deterministic():
    first = select_subsequence(make_analytic_scenario(), 4)
    second = select_subsequence(make_analytic_scenario(), 4)
    assert first == second


def test_exhausted_schedule_raises():
    with pytest.raises(SelectionError) as excinfo:
        select_subsequence(make_oracle_shift(20, Fraction(1, 2)), 1)
    assert excinfo.value.k == 1
    assert "exhausted" in str(excinfo.value)
