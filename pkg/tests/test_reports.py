from __future__ import annotations

import json
import math
from fractions import Fraction

import pytest

from seqcyclic.criterion.conditions import check_condition_ii, check_condition_iii
from seqcyclic.reports import (
    REPORT_SCHEMA_VERSION,
    build_report,
    combine_verdicts,
    condition_fnorms,
    dumps_report,
    emit_convergence_table,
    emit_rows,
    jsonable,
    write_json_report,
)
from seqcyclic.scenarios.oracle import make_oracle_shift
from seqcyclic.spaces.grid_vector import GridVector
from seqcyclic.utils.numbers import format_number, to_json_number
from seqcyclic.utils.statistics import describe


@pytest.mark.parametrize(
    ("verdicts", "expected"),
    [
        ([], "pass"),
        (["pass", "pass"], "pass"),
        (["pass", "inconclusive"], "inconclusive"),
        (["inconclusive", "fail", "pass"], "fail"),
    ],
)
def test_combine_verdicts(verdicts, expected):
    assert combine_verdicts(verdicts) == expected


@pytest.mark.parametrize(
    ("value", "text"),
    [
        (None, ""),
        (True, "true"),
        (0.0, "0"),
        (-0.0, "0"),
        (Fraction(0), "0"),
        (Fraction(6, 3), "2"),
        (Fraction(1, 4), "0.25"),
        (3.0, "3"),
        (1e-300, "1e-300"),
        (float("inf"), "inf"),
        (0.1 + 0j, "0.1"),
        (Fraction(1, 2**2000), "0"),
    ],
)
def test_format_number(value, text):
    assert format_number(value) == text


def test_to_json_number():
    assert to_json_number(Fraction(3, 4)) == 0.75
    assert to_json_number(2.0) == 2
    assert to_json_number(math.inf) == "inf"
    assert to_json_number(Fraction(10**400)) == 10**400
    assert to_json_number(Fraction(10**400 + 1, 3)) == "inf"


def test_describe_handles_missing_and_unbounded_values():
    summary = describe([0, Fraction(1, 2), None, math.inf])
    assert summary["count"] == 3
    assert summary["max"] == 1.0
    assert summary["zeros"] == 1
    assert "missing" in summary["comments"] and "capped" in summary["comments"]
    empty = describe([])
    assert empty["count"] == 0 and math.isnan(empty["mean"])
    with pytest.raises(ValueError):
        describe([math.inf], nonfinite="error")


def test_jsonable():
    value = {
        "v": GridVector.basis(1, 2, Fraction(1, 3)),
        "t": (Fraction(1, 2), 3),
        "z": 1 + 1j,
        1: None,
    }
    assert jsonable(value) == {
        "v": {"type": "grid-vector", "entries": [[1, 2, "1/3"]]},
        "t": [0.5, 3],
        "z": "(1+1j)",
        "1": None,
    }


def test_header_only_table():
    report = {"samples": []}
    assert emit_convergence_table(report) == "k,j,fnorm,member,pass\n"
    assert emit_convergence_table(report, 2) == "k,j,seminorm_1,seminorm_2,fnorm,member,pass\n"


def test_zero_defect_table_reads_zero():
    scenario = make_oracle_shift(4, horizon=2, k_max=2)
    table = emit_convergence_table(check_condition_iii(scenario))
    assert table == (
        "k,j,seminorm_1,seminorm_2,fnorm,member,pass\n"
        "1,1,0,0,0,true,true\n"
        "2,2,0,0,0,true,true\n"
    )


def test_missing_seminorms_leave_empty_cells():
    scenario = make_oracle_shift(4, horizon=2, k_max=1).replace(y_membership=lambda v: False)
    table = emit_convergence_table(check_condition_iii(scenario), 2)
    assert table.splitlines()[1] == "1,1,,,,false,false"


def test_emit_rows():
    assert emit_rows(["n", "distance"], [(0, 1.5), (1, Fraction(0))]) == (
        "n,distance\n0,1.5\n1,0\n"
    )
    assert emit_rows(["v"], [["pass"]]) == "v\npass\n"


def test_report_layout_and_determinism(tmp_path):
    scenario = make_oracle_shift(20)
    report = check_condition_ii(scenario)
    built = build_report("check-ii", "pass", scenario, {"reports": [report]},
                         condition_fnorms([report]))
    assert list(built) == [
        "schema_version", "command", "verdict", "scenario", "provenance", "summary", "result",
    ]
    assert built["schema_version"] == REPORT_SCHEMA_VERSION
    assert built["scenario"]["kind"] == "oracle"
    assert built["scenario"]["mode"] == "exact"
    assert built["scenario"]["schedule"] == [20 * k for k in range(9)]
    assert built["summary"]["count"] == 30
    first = dumps_report(built)
    second = dumps_report(
        build_report("check-ii", "pass", scenario, {"reports": [check_condition_ii(scenario)]},
                     condition_fnorms([report]))
    )
    assert first == second
    assert first.endswith("}\n")
    path = write_json_report(built, tmp_path / "nested" / "check-ii.json")
    assert json.loads(path.read_text(encoding="utf-8"))["command"] == "check-ii"


def test_non_finite_values_are_strings():
    scenario = make_oracle_shift(4)
    built = build_report("probe", "inconclusive", scenario, {"best": math.inf}, [])
    text = dumps_report(built)
    assert json.loads(text)["result"]["best"] == "inf"
    assert json.loads(text)["summary"]["mean"] == "nan"
