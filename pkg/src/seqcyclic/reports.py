"""
JSON reports and CSV convergence tables.

Every report is a JSON object with a fixed key order::

    {"schema_version": "1.0", "command": ..., "verdict": ..., "scenario": {...},
     "provenance": {...}, "summary": {...}, "result": {...}}

The layout is documented in ``docs/reference/report-schema.md``. Reports carry no timestamps,
so the same configuration always produces byte-identical files.
"""

from __future__ import annotations

import csv
import io
import json
import logging
from fractions import Fraction
from numbers import Real
from typing import TYPE_CHECKING, Any

from seqcyclic.spaces.dyadic import DyadicPolynomial
from seqcyclic.spaces.grid_vector import GridVector
from seqcyclic.spaces.serialization import vector_to_records
from seqcyclic.utils.numbers import format_number, to_json_number
from seqcyclic.utils.statistics import describe

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence
    from pathlib import Path

    from seqcyclic.criterion.scenario_spec import ScenarioSpec
    from seqcyclic.results.result_types import ConditionReport, SampleRecord, Verdict

logger = logging.getLogger(__name__)

REPORT_SCHEMA_VERSION = "1.0"

_SEVERITY = {"pass": 0, "inconclusive": 1, "fail": 2}


def combine_verdicts(verdicts: Iterable[Verdict]) -> Verdict:
    """fail beats inconclusive beats pass; an empty sequence passes."""
    worst: Verdict = "pass"
    for verdict in verdicts:
        if _SEVERITY[verdict] > _SEVERITY[worst]:
            worst = verdict
    return worst


def jsonable(value: Any) -> Any:
    """Recursively convert recorded values (Fractions, vectors, tuples) to JSON types."""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, (DyadicPolynomial, GridVector)):
        return vector_to_records(value)
    if isinstance(value, complex):
        return format_number(value)
    if isinstance(value, (Real, Fraction)):
        return to_json_number(value)
    if isinstance(value, dict):
        return {str(key): jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(item) for item in value]
    return str(value)


def scenario_header(scenario: ScenarioSpec) -> dict[str, Any]:
    shown = max(scenario.k_max, scenario.tail_max) + 1
    return {
        "kind": scenario.kind,
        "mode": "exact" if scenario.exact else "float",
        "operator": scenario.operator.name,
        "space": scenario.y_space.name,
        "horizon": scenario.y_space.horizon,
        "k_max": scenario.k_max,
        "tail_max": scenario.tail_max,
        "decay_tol": scenario.decay_tol,
        "transport_tol": scenario.tolerance_ii,
        "estimate_tol": scenario.estimate_tol,
        "schedule": list(scenario.exponent_schedule.values[:shown]),
    }


def build_report(
    command: str,
    verdict: Verdict,
    scenario: ScenarioSpec,
    result: dict[str, Any],
    fnorms: Sequence[Real | None] = (),
) -> dict[str, Any]:
    """Assemble the JSON-ready report of one command."""
    summary = describe(list(fnorms))
    return {
        "schema_version": REPORT_SCHEMA_VERSION,
        "command": command,
        "verdict": verdict,
        "scenario": jsonable(scenario_header(scenario)),
        "provenance": jsonable(scenario.provenance),
        "summary": jsonable(summary),
        "result": jsonable(result),
    }


def condition_fnorms(reports: Iterable[ConditionReport]) -> list[Real | None]:
    return [sample["fnorm"] for report in reports for sample in report["samples"]]


def dumps_report(report: dict[str, Any]) -> str:
    return json.dumps(report, indent=2, allow_nan=False) + "\n"


def write_json_report(report: dict[str, Any], path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps_report(report), encoding="utf-8")
    logger.info("wrote %s", path)
    return path


def _horizon_of(samples: Sequence[SampleRecord], horizon: int | None) -> int:
    if horizon is not None:
        return horizon
    return max((len(s["seminorms"]) for s in samples), default=0)


def emit_convergence_table(report: ConditionReport, horizon: int | None = None) -> str:
    """
    CSV with columns ``k, j, seminorm_1..seminorm_H, fnorm, member, pass``, one row per
    evaluated tuple in report order.

    ``horizon`` fixes H; by default it is the longest recorded seminorm vector. Cells use the
    shortest round-trip decimal (an exact zero is ``0``); missing values are empty.
    """
    samples = report["samples"]
    width = _horizon_of(samples, horizon)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(
        ["k", "j", *(f"seminorm_{n}" for n in range(1, width + 1)), "fnorm", "member", "pass"]
    )
    for sample in samples:
        seminorms = list(sample["seminorms"][:width])
        seminorms += [None] * (width - len(seminorms))
        writer.writerow([
            sample["k"],
            format_number(sample["j"]),
            *(format_number(value) for value in seminorms),
            format_number(sample["fnorm"]),
            format_number(sample["member"]),
            format_number(sample["passed"]),
        ])
    return buffer.getvalue()


def emit_rows(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """CSV of arbitrary rows with the report number formatting."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([value if isinstance(value, str) else format_number(value)
                         for value in row])
    return buffer.getvalue()


def write_text(text: str, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info("wrote %s", path)
    return path
