"""
TOML scenario configuration.

Example::

    [scenario]
    kind = "snake"          # analytic | snake | oracle
    mode = "exact"          # exact | float
    k_max = 4
    tail_max = 8

    [snake]
    lambda = 2
    space = "ellp"          # ellp | c0 | s
    p = 1
    targets = 8

    [run]
    commands = ["check-primed", "build-vector(8)", "verify-orbit(2..6)"]
"""

from __future__ import annotations

import dataclasses
import logging
import re
import tomllib
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import TYPE_CHECKING, Any

from seqcyclic.errors import ConfigError
from seqcyclic.operators.snake import ShiftParams
from seqcyclic.scenarios.analytic import AnalyticScenarioConfig, make_analytic_scenario
from seqcyclic.scenarios.oracle import MAX_ORACLE_LENGTH, make_oracle_shift
from seqcyclic.scenarios.snake import SnakeScenarioConfig, make_snake_scenario
from seqcyclic.spaces.grid_vector import GridVector
from seqcyclic.spaces.serialization import grid_vector_from_records

if TYPE_CHECKING:
    from seqcyclic.criterion.scenario_spec import ScenarioSpec

logger = logging.getLogger(__name__)

SCENARIO_KINDS = ("analytic", "snake", "oracle")
MODES = ("exact", "float")
FORMATS = ("json", "csv", "both")
SPACES = ("ellp", "c0", "s")
COVERAGES = ("full", "minimal")

_DEFAULTS = {
    "analytic": {"mode": "float", "horizon": 10, "k_max": 5, "tail_max": 60},
    "snake": {"mode": "exact", "horizon": 12, "k_max": 4, "tail_max": 8},
    "oracle": {"mode": "exact", "horizon": 12, "k_max": 4, "tail_max": 8},
}

_COMMAND = re.compile(r"^([a-z-]+)\s*(?:\((.*)\))?$")
_RANGE = re.compile(r"^(\d+)\s*\.\.\s*(\d+)$")


@dataclass(frozen=True)
class Command:
    """One entry of ``[run] commands``: a name and its integer arguments."""

    name: str
    args: tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.name == "verify-orbit":
            return f"{self.name}({self.args[0]}..{self.args[1]})"
        if self.args:
            return f"{self.name}({', '.join(str(a) for a in self.args)})"
        return self.name

    @property
    def slug(self) -> str:
        """File-name friendly form, e.g. ``verify-orbit-2-6``."""
        return "-".join([self.name, *(str(a) for a in self.args)])


def parse_command(text: str) -> Command:
    """
    Parse ``check-i``, ``check-ii``, ``check-iii``, ``check-primed``, ``build-vector(N)``,
    ``verify-orbit(a..b)`` (or ``verify-orbit(k)``) and ``probe(index, n_max)``.
    """
    match = _COMMAND.match(text.strip())
    if match is None:
        raise ConfigError(f"cannot parse command {text!r}", field="run.commands")
    name, raw = match.group(1), (match.group(2) or "").strip()
    if name in ("check-i", "check-ii", "check-iii", "check-primed"):
        if raw:
            raise ConfigError(f"{name} takes no arguments", field="run.commands")
        return Command(name)
    if name == "build-vector":
        return Command(name, (_positive(raw, text),))
    if name == "verify-orbit":
        ranged = _RANGE.match(raw)
        if ranged:
            first, last = int(ranged.group(1)), int(ranged.group(2))
        else:
            first = last = _positive(raw, text)
        if not 2 <= first <= last:
            raise ConfigError(f"verify-orbit needs 2 <= a <= b, got {raw!r}", field="run.commands")
        return Command(name, (first, last))
    if name == "probe":
        parts = [part.strip() for part in raw.split(",")]
        if len(parts) != 2:
            raise ConfigError(f"probe takes (index, n_max), got {raw!r}", field="run.commands")
        return Command(name, (_positive(parts[0], text), _positive(parts[1], text)))
    raise ConfigError(f"unknown command {name!r}", field="run.commands")


def _positive(raw: str, text: str) -> int:
    if not raw.isdigit() or int(raw) < 1:
        raise ConfigError(f"expected a positive integer in {text!r}", field="run.commands")
    return int(raw)


@dataclass(frozen=True)
class ScenarioConfig:
    """A validated configuration file. Command-line flags are applied with ``with_overrides``."""

    kind: str
    mode: str
    k_max: int
    tail_max: int
    horizon: int
    mesh_density: int = 16
    schedule_length: int = 256
    lam: Any = 2
    space: str = "ellp"
    p: float = 1
    targets: int | tuple[GridVector, ...] = 8
    coverage: str = "full"
    budget: float | None = None
    length: int = 20
    decay_tol: float | None = None
    transport_tol: float = 1e-10
    estimate_tol: float = 1e-9
    commands: tuple[Command, ...] = ()
    format: str = "json"
    N: int = 8
    margin: int = 2
    select: bool = True
    source: str | None = None

    @property
    def exact(self) -> bool:
        return self.mode == "exact"

    @property
    def target_count(self) -> int:
        return self.targets if isinstance(self.targets, int) else len(self.targets)

    def with_overrides(
        self,
        mode: str | None = None,
        horizon: int | None = None,
        format: str | None = None,
        commands: tuple[Command, ...] | None = None,
    ) -> ScenarioConfig:
        """Apply command-line overrides; ``None`` keeps the configured value."""
        changes: dict[str, Any] = {}
        if mode is not None:
            changes["mode"] = mode
        if horizon is not None:
            if horizon < 1:
                raise ConfigError(f"horizon must be >= 1, got {horizon}", field="--horizon")
            changes["horizon"] = horizon
        if format is not None:
            changes["format"] = format
        if commands is not None:
            if not commands:
                raise ConfigError("at least one command is required", field="run.commands")
            changes["commands"] = tuple(commands)
        cfg = dataclasses.replace(self, **changes)
        _check_horizons(cfg)
        return cfg

    def weight(self) -> Fraction | float:
        """lambda in the number type of the mode."""
        return Fraction(str(self.lam)) if self.exact else float(self.lam)


class _Table:
    """Typed access to one TOML table with field-qualified errors."""

    def __init__(self, data: dict, name: str):
        value = data.get(name, {})
        if not isinstance(value, dict):
            raise ConfigError("expected a table", field=name)
        self.data = value
        self.name = name

    def get(self, key: str, kinds: tuple[type, ...], default: Any) -> Any:
        if key not in self.data:
            return default
        value = self.data[key]
        if isinstance(value, bool) and bool not in kinds or not isinstance(value, kinds):
            expected = " or ".join(k.__name__ for k in kinds)
            raise ConfigError(f"expected {expected}, got {value!r}", field=f"{self.name}.{key}")
        return value

    def positive(self, key: str, default: int) -> int:
        value = self.get(key, (int,), default)
        if value < 1:
            raise ConfigError(f"must be >= 1, got {value}", field=f"{self.name}.{key}")
        return value

    def choice(self, key: str, choices: tuple[str, ...], default: str) -> str:
        value = self.get(key, (str,), default)
        if value not in choices:
            raise ConfigError(f"must be one of {choices}, got {value!r}",
                              field=f"{self.name}.{key}")
        return value

    def tolerance(self, key: str, default: float | None) -> float | None:
        value = self.get(key, (int, float), default)
        if value is not None and value < 0:
            raise ConfigError(f"must be >= 0, got {value}", field=f"{self.name}.{key}")
        return value


def _targets(table: _Table) -> int | tuple[GridVector, ...]:
    raw = table.get("targets", (int, list), 8)
    if isinstance(raw, int):
        if raw < 1:
            raise ConfigError(f"must be >= 1, got {raw}", field="snake.targets")
        return raw
    try:
        targets = tuple(
            grid_vector_from_records([[i, j, str(c)] for i, j, c in entries]) for entries in raw
        )
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"malformed target list: {exc}", field="snake.targets") from exc
    if not targets:
        raise ConfigError("the target list is empty", field="snake.targets")
    return targets


def parse_config(data: dict, source: str | None = None) -> ScenarioConfig:
    scenario = _Table(data, "scenario")
    kind = scenario.choice("kind", SCENARIO_KINDS, "snake")
    defaults = _DEFAULTS[kind]
    analytic = _Table(data, "analytic")
    snake = _Table(data, "snake")
    oracle = _Table(data, "oracle")
    tolerances = _Table(data, "tolerances")
    run = _Table(data, "run")

    lam = (snake if kind == "snake" else oracle).get("lambda", (int, float), 2)
    if kind == "snake" and not lam > 1:
        raise ConfigError(f"lambda must be > 1, got {lam}", field="snake.lambda")
    if kind == "oracle" and not lam > 0:
        raise ConfigError(f"lambda must be > 0, got {lam}", field="oracle.lambda")

    budget = snake.get("budget", (int, float), None)
    if budget is not None and budget <= 0:
        raise ConfigError(f"must be positive, got {budget}", field="snake.budget")
    p = snake.get("p", (int, float), 1)
    if p < 1:
        raise ConfigError(f"must be >= 1, got {p}", field="snake.p")
    length = oracle.positive("length", 20)
    if length > MAX_ORACLE_LENGTH:
        raise ConfigError(f"must be <= {MAX_ORACLE_LENGTH}, got {length}", field="oracle.length")

    commands_raw = run.get("commands", (list,), ["check-i", "check-ii", "check-iii"])
    if not commands_raw or not all(isinstance(c, str) for c in commands_raw):
        raise ConfigError("expected a non-empty list of strings", field="run.commands")

    schedule_table = analytic if kind == "analytic" else oracle
    cfg = ScenarioConfig(
        kind=kind,
        mode=scenario.choice("mode", MODES, defaults["mode"]),
        k_max=scenario.positive("k_max", defaults["k_max"]),
        tail_max=scenario.positive("tail_max", defaults["tail_max"]),
        horizon=scenario.positive("horizon", defaults["horizon"]),
        mesh_density=analytic.positive("mesh_density", 16),
        schedule_length=schedule_table.positive(
            "schedule_length", 256 if kind == "analytic" else 32
        ),
        lam=lam,
        space=snake.choice("space", SPACES, "ellp"),
        p=p,
        targets=_targets(snake),
        coverage=snake.choice("coverage", COVERAGES, "full"),
        budget=budget,
        length=length,
        decay_tol=tolerances.tolerance("decay", None),
        transport_tol=tolerances.tolerance("transport", 1e-10),
        estimate_tol=tolerances.tolerance("estimate", 1e-9),
        commands=tuple(parse_command(c) for c in commands_raw),
        format=run.choice("format", FORMATS, "json"),
        N=run.positive("N", 8),
        margin=run.get("margin", (int,), 2),
        select=run.get("select", (bool,), True),
        source=source,
    )
    _check_horizons(cfg)
    return cfg


def _check_horizons(cfg: ScenarioConfig) -> None:
    if cfg.margin < 0:
        raise ConfigError(f"must be >= 0, got {cfg.margin}", field="run.margin")
    needed = max(cfg.k_max, cfg.tail_max, cfg.N, *_built_sizes(cfg))
    if cfg.kind == "snake" and needed > cfg.target_count:
        raise ConfigError(
            f"k_max, tail_max and N need {needed} scheduled targets, only "
            f"{cfg.target_count} configured",
            field="snake.targets",
        )
    built = cfg.N
    for command in cfg.commands:
        if command.name == "build-vector":
            built = command.args[0]
        elif command.name == "verify-orbit" and command.args[1] > built - cfg.margin:
            raise ConfigError(
                f"{command} needs k <= N - margin = {built - cfg.margin}", field="run.commands"
            )
        elif (command.name == "probe" and cfg.kind == "snake"
              and command.args[0] > cfg.target_count):
            raise ConfigError(
                f"{command} targets x_{command.args[0]}, only {cfg.target_count} scheduled",
                field="run.commands",
            )


def _built_sizes(cfg: ScenarioConfig) -> list[int]:
    return [c.args[0] for c in cfg.commands if c.name == "build-vector"]


def load_config(path: str | Path) -> ScenarioConfig:
    """
    Read and validate a TOML configuration.

    Raises:
        ConfigError: unreadable file, TOML syntax error (with its line) or invalid field.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        line = re.search(r"at line (\d+)", str(exc))
        raise ConfigError(
            f"invalid TOML: {exc}", line=int(line.group(1)) if line else None
        ) from exc
    cfg = parse_config(data, source=str(path))
    logger.info("loaded %s scenario config from %s", cfg.kind, path)
    return cfg


def build_scenario(cfg: ScenarioConfig) -> ScenarioSpec:
    """
    Construct the ScenarioSpec a configuration describes.

    Raises:
        ConfigError: a value is rejected by the scenario constructors.
        ScheduleError: the snake builder cannot schedule a target.
    """
    try:
        if cfg.kind == "analytic":
            return make_analytic_scenario(
                AnalyticScenarioConfig(
                    dense_poly_count=cfg.k_max,
                    horizon=cfg.horizon,
                    mesh_density=cfg.mesh_density,
                    schedule_length=cfg.schedule_length,
                    tail_max=cfg.tail_max,
                    decay_tol=1e-8 if cfg.decay_tol is None else cfg.decay_tol,
                    estimate_tol=cfg.estimate_tol,
                )
            )
        if cfg.kind == "snake":
            params = ShiftParams(lam=cfg.weight(), space_kind=cfg.space, growth_budget=cfg.budget)
            explicit = None if isinstance(cfg.targets, int) else cfg.targets
            return make_snake_scenario(
                SnakeScenarioConfig(
                    params=params,
                    target_count=cfg.target_count,
                    targets=explicit,
                    coverage=cfg.coverage,
                    p=cfg.p,
                    horizon=cfg.horizon,
                    k_max=cfg.k_max,
                    tail_max=cfg.tail_max,
                    decay_tol=cfg.decay_tol,
                    transport_tol=cfg.transport_tol,
                    estimate_tol=cfg.estimate_tol,
                )
            )
        scenario = make_oracle_shift(
            cfg.length,
            cfg.weight(),
            horizon=cfg.horizon,
            schedule_length=cfg.schedule_length,
            k_max=cfg.k_max,
            tail_max=cfg.tail_max,
        )
        tolerances = {"estimate_tol": cfg.estimate_tol, "transport_tol": cfg.transport_tol}
        if cfg.decay_tol is not None:
            tolerances["decay_tol"] = cfg.decay_tol
        return scenario.replace(**tolerances)
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
