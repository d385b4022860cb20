from __future__ import annotations

from fractions import Fraction

import pytest

from seqcyclic.criterion.conditions import check_condition_iii, defect
from seqcyclic.criterion.construction import (
    build_partial_hypercyclic_vector,
    verify_orbit_estimate,
)
from seqcyclic.criterion.selection import select_scenario
from seqcyclic.errors import ConstructionError
from seqcyclic.operators.snake import ShiftParams
from seqcyclic.scenarios.analytic import make_analytic_scenario
from seqcyclic.scenarios.oracle import make_oracle_shift
from seqcyclic.scenarios.snake import SnakeScenarioConfig, make_snake_scenario
from seqcyclic.spaces.grid_vector import GridVector


def test_oracle_vector_and_certificate():
    scenario = make_oracle_shift(20)
    built = build_partial_hypercyclic_vector(scenario, 3)
    assert built["vector"] == GridVector.first_row(
        {21: Fraction(1, 2**20), 42: Fraction(1, 2**40), 63: Fraction(1, 2**60)}
    )
    assert len(built["summands"]) == 3
    assert [row["M"] for row in built["cauchy"]] == [1, 2]
    assert built["cauchy"][0]["bound"] == Fraction(1, 2) - Fraction(1, 8)
    assert built["passed"]


def test_single_summand_has_an_empty_certificate():
    built = build_partial_hypercyclic_vector(make_oracle_shift(4), 1)
    assert built["cauchy"] == []
    assert built["passed"]
    with pytest.raises(ValueError):
        build_partial_hypercyclic_vector(make_oracle_shift(4), 0)


def test_summands_outside_y_abort_the_construction():
    scenario = make_oracle_shift(4).replace(y_membership=lambda v: False)
    with pytest.raises(ConstructionError) as excinfo:
        build_partial_hypercyclic_vector(scenario, 3)
    assert excinfo.value.j == 1


def test_orbit_estimate_outside_the_range_is_inconclusive():
    scenario = make_oracle_shift(20)
    built = build_partial_hypercyclic_vector(scenario, 6)
    for k in (1, 5, 6):
        estimate = verify_orbit_estimate(scenario, built, k)
        assert estimate["verdict"] == "inconclusive"
        assert estimate["fnorm"] is None
        assert "outside" in estimate["note"]
    assert verify_orbit_estimate(scenario, built, 5, margin=1)["verdict"] == "pass"


def test_zero_margin_estimate_at_the_last_summand():
    scenario = make_oracle_shift(20)
    built = build_partial_hypercyclic_vector(scenario, 4)
    estimate = verify_orbit_estimate(scenario, built, 4, margin=0)
    assert estimate["verdict"] == "pass"
    assert estimate["decomposition"] == {"head": 0, "defect": 0, "tail": 0}
    assert estimate["fnorm"] == 0


def test_oracle_orbit_estimate_decomposition():
    scenario = make_oracle_shift(20)
    built = build_partial_hypercyclic_vector(scenario, 8)
    estimate = verify_orbit_estimate(scenario, built, 3)
    assert estimate["verdict"] == "pass"
    assert estimate["decomposition"]["head"] == 0
    assert estimate["decomposition"]["defect"] == 0
    assert estimate["fnorm"] == estimate["decomposition"]["tail"]
    assert estimate["bound"] == pytest.approx(0.5 + 1e-9, abs=1e-15)


def test_expanding_weight_breaks_the_orbit_estimate():
    scenario = make_oracle_shift(20, Fraction(1, 2))
    built = build_partial_hypercyclic_vector(scenario, 6)
    assert not built["passed"]
    assert verify_orbit_estimate(scenario, built, 3)["verdict"] == "fail"


def _assert_pipeline(scenario):
    built = build_partial_hypercyclic_vector(scenario, 12)
    assert built["passed"]
    for k in range(2, 9):
        estimate = verify_orbit_estimate(scenario, built, k)
        assert estimate["verdict"] == "pass", estimate
        assert estimate["fnorm"] <= Fraction(1, 2 ** (k - 2)) + Fraction(1, 10**9)


@pytest.mark.slow
def test_snake_pipeline():
    _assert_pipeline(make_snake_scenario(SnakeScenarioConfig(target_count=12)))


@pytest.mark.slow
def test_analytic_pipeline():
    _assert_pipeline(select_scenario(make_analytic_scenario(), 12))


def test_float_snake_defects_vanish_past_the_underflow_threshold():
    scenario = make_snake_scenario(
        SnakeScenarioConfig(params=ShiftParams(2.0), target_count=12)
    )
    assert not scenario.exact
    assert scenario.n(12) > 1100
    for k in range(1, 13):
        assert defect(scenario, k).is_zero()
    assert check_condition_iii(scenario, k_max=12)["verdict"] == "pass"


@pytest.mark.slow
def test_float_snake_pipeline():
    _assert_pipeline(
        make_snake_scenario(SnakeScenarioConfig(params=ShiftParams(2.0), target_count=12))
    )
