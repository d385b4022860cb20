"""
Command-line front-end.

Usage:
    seqcyclic run configs/snake-l1.toml --out reports/ --format both
    seqcyclic run configs/analytic.toml --float --horizon 4 -v

Exit status: 0 when every command passes, 2 when any fails, 3 when none fails but some
result is inconclusive, 1 on configuration, scheduling or construction errors.
"""

from __future__ import annotations

import argparse
import logging
import math
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import TYPE_CHECKING, Any

from dotenv import load_dotenv

from seqcyclic.actions import BuildVectorAction, CriterionCallable
from seqcyclic.checks import ConditionCheck
from seqcyclic.criterion import (
    build_partial_hypercyclic_vector,
    check_condition_i,
    check_condition_ii,
    check_condition_iii,
    check_corollary_conditions,
    density_probe,
    select_scenario,
    verify_orbit_estimate,
)
from seqcyclic.errors import ConfigError, ScheduleError, SelectionError, SeqcyclicError
from seqcyclic.reports import (
    build_report,
    combine_verdicts,
    condition_fnorms,
    emit_convergence_table,
    emit_rows,
    write_json_report,
    write_text,
)
from seqcyclic.run_criterion import run_criterion
from seqcyclic.scenarios.config import FORMATS, build_scenario, load_config

if TYPE_CHECKING:
    from collections.abc import Sequence

    from seqcyclic.criterion.scenario_spec import ScenarioSpec
    from seqcyclic.results.result_types import HypercyclicVectorResult, Verdict
    from seqcyclic.scenarios.config import Command, ScenarioConfig

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_ERROR = 1
EXIT_FAIL = 2
EXIT_INCONCLUSIVE = 3

OUT_DIR_ENV = "SEQCYCLIC_OUT_DIR"
DEFAULT_OUT_DIR = "seqcyclic-reports"

_PRIMED_SUFFIX = {"i'": "-i", "ii'": "-ii", "iii'": "-iii"}


@dataclass(frozen=True)
class RunRequest:
    """
    One batch run. ``None`` fields fall back to the configuration file (and, for the output
    directory, to ``SEQCYCLIC_OUT_DIR`` and then ``./seqcyclic-reports``).
    """

    config_path: Path
    commands: tuple[Command, ...] | None = None
    output: Path | None = None
    format: str | None = None
    mode: str | None = None
    horizon: int | None = None


@dataclass
class CommandOutcome:
    verdict: Verdict
    report: dict[str, Any]
    tables: dict[str, str]


def resolve_output_dir(output: Path | str | None) -> Path:
    if output is not None:
        return Path(output)
    load_dotenv()
    return Path(os.environ.get(OUT_DIR_ENV) or DEFAULT_OUT_DIR)


def exit_status(verdicts: Sequence[Verdict]) -> int:
    worst = combine_verdicts(verdicts)
    return {"pass": EXIT_PASS, "fail": EXIT_FAIL, "inconclusive": EXIT_INCONCLUSIVE}[worst]


class CommandRunner:
    """
    Executes configured commands against one scenario.

    check-primed runs on the scenario as built. The other commands (check-i/ii/iii,
    build-vector, verify-orbit, probe) run on the greedy subsequence when ``select`` is on; if
    the selection fails they fall back to the base schedule and the report says so.
    """

    def __init__(self, cfg: ScenarioConfig, scenario: ScenarioSpec):
        self.cfg = cfg
        self.base = scenario
        self._proposition: ScenarioSpec | None = None
        self.built: HypercyclicVectorResult | None = None

    @property
    def selection_count(self) -> int:
        built = [c.args[0] for c in self.cfg.commands if c.name == "build-vector"]
        return max(self.cfg.k_max, self.cfg.N, *built)

    @property
    def proposition(self) -> ScenarioSpec:
        if self._proposition is None:
            if not self.cfg.select:
                self._proposition = self.base
            else:
                try:
                    self._proposition = select_scenario(self.base, self.selection_count)
                except SelectionError as exc:
                    logger.warning("%s; using the base schedule", exc)
                    self._proposition = self.base.with_schedule(
                        self.base.exponent_schedule,
                        selection={"rule": "greedy-diagonal", "failed": str(exc),
                                   "fallback": "base schedule"},
                    )
            count = min(self.base.tail_max, self.selection_count)
            self._proposition = self._proposition.replace(tail_max=count)
        return self._proposition

    def execute(self, command: Command) -> CommandOutcome:
        logger.info("running %s", command)
        if command.name == "check-primed":
            return self._check_primed(command)
        if command.name.startswith("check-"):
            return self._check(command)
        if command.name == "build-vector":
            return self._build_vector(command)
        if command.name == "verify-orbit":
            return self._verify_orbit(command)
        return self._probe(command)

    def _horizon(self) -> int:
        return self.base.y_space.horizon

    def _check(self, command: Command) -> CommandOutcome:
        checker = {
            "check-i": check_condition_i,
            "check-ii": check_condition_ii,
            "check-iii": check_condition_iii,
        }[command.name]
        scenario = self.proposition
        report = checker(scenario)
        return CommandOutcome(
            report["verdict"],
            build_report(str(command), report["verdict"], scenario, {"reports": [report]},
                         condition_fnorms([report])),
            {"": emit_convergence_table(report, self._horizon())},
        )

    def _check_primed(self, command: Command) -> CommandOutcome:
        reports = check_corollary_conditions(self.base)
        verdict = combine_verdicts(r["verdict"] for r in reports)
        horizon = self._horizon()
        return CommandOutcome(
            verdict,
            build_report(str(command), verdict, self.base, {"reports": list(reports)},
                         condition_fnorms(reports)),
            {
                _PRIMED_SUFFIX[r["condition_id"]]: emit_convergence_table(r, horizon)
                for r in reports
            },
        )

    def _build_vector(self, command: Command) -> CommandOutcome:
        N = command.args[0]
        scenario = self.proposition
        precondition = ConditionCheck(lambda s: check_condition_ii(s, k_max=0, tail_max=N))
        outcome = run_criterion(
            scenario,
            [precondition],
            on_pass=BuildVectorAction(N),
            on_fail=CriterionCallable(lambda s, reports, **kwargs: None),
        )
        built = outcome["action_result"]
        result: dict[str, Any] = {"precondition": outcome["reports"][0], "built": built}
        if built is None:
            verdict: Verdict = "fail"
            rows = []
            fnorms = []
        else:
            self.built = built
            verdict = "pass" if built["passed"] else "fail"
            rows = [[r["M"], r["N"], r["fnorm"], r["bound"], r["passed"]] for r in built["cauchy"]]
            fnorms = built["summand_fnorms"]
        return CommandOutcome(
            verdict,
            build_report(str(command), verdict, scenario, result, fnorms),
            {"": emit_rows(["M", "N", "fnorm", "bound", "pass"], rows)},
        )

    def _ensure_built(self) -> HypercyclicVectorResult:
        if self.built is None:
            self.built = build_partial_hypercyclic_vector(self.proposition, self.cfg.N)
        return self.built

    def _verify_orbit(self, command: Command) -> CommandOutcome:
        first, last = command.args
        scenario = self.proposition
        built = self._ensure_built()
        estimates = [
            verify_orbit_estimate(scenario, built, k, self.cfg.margin)
            for k in range(first, last + 1)
        ]
        verdict = combine_verdicts(e["verdict"] for e in estimates)
        rows = [
            [e["k"], e["N"], e["fnorm"], e["bound"], e["decomposition"]["head"],
             e["decomposition"]["defect"], e["decomposition"]["tail"], e["verdict"]]
            for e in estimates
        ]
        return CommandOutcome(
            verdict,
            build_report(str(command), verdict, scenario, {"estimates": estimates},
                         [e["fnorm"] for e in estimates]),
            {"": emit_rows(["k", "N", "fnorm", "bound", "head", "defect", "tail", "verdict"],
                           rows)},
        )

    def _probe(self, command: Command) -> CommandOutcome:
        index, n_max = command.args
        scenario = self.proposition
        built = self._ensure_built()
        probe = density_probe(scenario, built["vector"], scenario.x(index), n_max)
        verdict: Verdict = "pass" if math.isfinite(probe["best_distance"]) else "inconclusive"
        return CommandOutcome(
            verdict,
            build_report(str(command), verdict, scenario,
                         {"target_index": index, "N": built["N"], "probe": probe}),
            {"": emit_rows(["n", "distance"], enumerate(probe["distances"]))},
        )


def write_outcome(outcome: CommandOutcome, command: Command, out_dir: Path, fmt: str) -> None:
    if fmt in ("json", "both"):
        write_json_report(outcome.report, out_dir / f"{command.slug}.json")
    if fmt in ("csv", "both"):
        for suffix, table in outcome.tables.items():
            write_text(table, out_dir / f"{command.slug}{suffix}.csv")


def run(request: RunRequest) -> int:
    """Load the configuration, run its commands, write the reports; returns the exit status."""
    try:
        cfg = load_config(request.config_path).with_overrides(
            mode=request.mode,
            horizon=request.horizon,
            format=request.format,
            commands=request.commands,
        )
        scenario = build_scenario(cfg)
    except ConfigError as exc:
        logger.error("configuration error: %s", exc)
        return EXIT_ERROR
    except ScheduleError as exc:
        logger.error("%s (offending target k=%d)", exc, exc.k)
        return EXIT_ERROR

    out_dir = resolve_output_dir(request.output)
    runner = CommandRunner(cfg, scenario)
    verdicts: list[Verdict] = []
    for command in cfg.commands:
        try:
            outcome = runner.execute(command)
        except SeqcyclicError as exc:
            logger.error("%s: %s", command, exc)
            return EXIT_ERROR
        write_outcome(outcome, command, out_dir, cfg.format)
        verdicts.append(outcome.verdict)
        print(f"{command}: {outcome.verdict}")
    return exit_status(verdicts)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqcyclic",
        description="Finite-horizon verification of the sequential hypercyclicity criterion.",
    )
    sub = parser.add_subparsers(dest="action", required=True)
    run_parser = sub.add_parser("run", help="run the commands of a scenario config")
    run_parser.add_argument("config", type=Path, help="TOML scenario configuration")
    run_parser.add_argument(
        "--out", type=Path, default=None,
        help=f"output directory (default: ${OUT_DIR_ENV}, else ./{DEFAULT_OUT_DIR})",
    )
    run_parser.add_argument("--format", choices=FORMATS, default=None,
                            help="report format (default: from the config, else json)")
    mode = run_parser.add_mutually_exclusive_group()
    mode.add_argument("--exact", dest="mode", action="store_const", const="exact",
                      help="exact rational arithmetic")
    mode.add_argument("--float", dest="mode", action="store_const", const="float",
                      help="floating point arithmetic")
    run_parser.add_argument("--horizon", type=int, default=None,
                            help="number of materialized seminorms")
    run_parser.add_argument("-v", "--verbose", action="count", default=0,
                            help="-v for INFO, -vv for DEBUG logging on stderr")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s",
                        stream=sys.stderr)
    request = RunRequest(
        config_path=args.config,
        output=args.out,
        format=args.format,
        mode=args.mode,
        horizon=args.horizon,
    )
    return run(request)


if __name__ == "__main__":
    sys.exit(main())
