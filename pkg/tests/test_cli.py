from __future__ import annotations

import json

import pytest

from seqcyclic.cli import (
    DEFAULT_OUT_DIR,
    EXIT_ERROR,
    EXIT_FAIL,
    EXIT_INCONCLUSIVE,
    EXIT_PASS,
    OUT_DIR_ENV,
    RunRequest,
    build_parser,
    exit_status,
    main,
    resolve_output_dir,
    run,
)
from seqcyclic.scenarios.config import parse_command

ORACLE = """
[scenario]
kind = "oracle"

[oracle]
length = 20
lambda = {lam}
schedule_length = {schedule}

[run]
commands = {commands}
"""


def write_oracle(tmp_path, commands, lam="2", schedule=32):
    path = tmp_path / "oracle.toml"
    path.write_text(
        ORACLE.format(lam=lam, schedule=schedule, commands=json.dumps(commands)),
        encoding="utf-8",
    )
    return path


@pytest.mark.parametrize(
    ("verdicts", "status"),
    [
        ([], EXIT_PASS),
        (["pass"], EXIT_PASS),
        (["pass", "inconclusive"], EXIT_INCONCLUSIVE),
        (["inconclusive", "fail"], EXIT_FAIL),
    ],
)
def test_exit_status(verdicts, status):
    assert exit_status(verdicts) == status


def test_checks_pass(tmp_path, capsys):
    config = write_oracle(tmp_path, ["check-i", "check-ii", "check-iii"])
    out = tmp_path / "out"
    assert main(["run", str(config), "--out", str(out), "--format", "both"]) == EXIT_PASS
    assert capsys.readouterr().out.splitlines() == [
        "check-i: pass",
        "check-ii: pass",
        "check-iii: pass",
    ]
    for name in ("check-i", "check-ii", "check-iii"):
        report = json.loads((out / f"{name}.json").read_text(encoding="utf-8"))
        assert report["command"] == name
        assert report["verdict"] == "pass"
        assert report["provenance"]["selection"]["rule"] == "greedy-diagonal"
        assert (out / f"{name}.csv").read_text(encoding="utf-8").startswith("k,j,seminorm_1,")


def test_reports_are_reproducible(tmp_path):
    config = write_oracle(tmp_path, ["check-ii"])
    first, second = tmp_path / "a", tmp_path / "b"
    assert main(["run", str(config), "--out", str(first)]) == EXIT_PASS
    assert main(["run", str(config), "--out", str(second)]) == EXIT_PASS
    assert (first / "check-ii.json").read_bytes() == (second / "check-ii.json").read_bytes()


def test_expanding_weight_fails(tmp_path, caplog):
    config = write_oracle(tmp_path, ["check-ii", "check-iii"], lam="0.5")
    out = tmp_path / "out"
    assert main(["run", str(config), "--out", str(out)]) == EXIT_FAIL
    report = json.loads((out / "check-ii.json").read_text(encoding="utf-8"))
    assert report["verdict"] == "fail"
    assert report["provenance"]["selection"]["fallback"] == "base schedule"
    assert "using the base schedule" in caplog.text


def test_short_schedule_is_inconclusive(tmp_path):
    config = write_oracle(tmp_path, ["check-ii"], schedule=3)
    assert main(["run", str(config), "--out", str(tmp_path / "out")]) == EXIT_INCONCLUSIVE


def test_construction_commands(tmp_path):
    config = write_oracle(
        tmp_path, ["build-vector(8)", "verify-orbit(2..6)", "probe(1, 30)"]
    )
    out = tmp_path / "out"
    assert main(["run", str(config), "--out", str(out), "--format", "both"]) == EXIT_PASS
    built = json.loads((out / "build-vector-8.json").read_text(encoding="utf-8"))
    assert built["result"]["built"]["N"] == 8
    assert built["result"]["precondition"]["verdict"] == "pass"
    orbit = (out / "verify-orbit-2-6.csv").read_text(encoding="utf-8").splitlines()
    assert orbit[0] == "k,N,fnorm,bound,head,defect,tail,verdict"
    assert [row.split(",")[0] for row in orbit[1:]] == ["2", "3", "4", "5", "6"]
    assert all(row.endswith(",pass") for row in orbit[1:])
    probe = json.loads((out / "probe-1-30.json").read_text(encoding="utf-8"))
    assert probe["result"]["probe"]["n_max"] == 30
    assert (out / "probe-1-30.csv").exists()


def test_zero_margin_verifies_up_to_the_last_summand(tmp_path):
    config = write_oracle(tmp_path, ["build-vector(4)", "verify-orbit(2..4)"])
    config.write_text(config.read_text(encoding="utf-8") + "margin = 0\n", encoding="utf-8")
    out = tmp_path / "out"
    assert main(["run", str(config), "--out", str(out), "--format", "csv"]) == EXIT_PASS
    orbit = (out / "verify-orbit-2-4.csv").read_text(encoding="utf-8").splitlines()
    assert [row.split(",")[0] for row in orbit[1:]] == ["2", "3", "4"]
    assert orbit[-1].startswith("4,4,0,")
    assert all(row.endswith(",pass") for row in orbit[1:])


def test_failed_precondition_skips_the_build(tmp_path):
    config = write_oracle(tmp_path, ["build-vector(8)"], lam="0.5")
    out = tmp_path / "out"
    assert main(["run", str(config), "--out", str(out)]) == EXIT_FAIL
    report = json.loads((out / "build-vector-8.json").read_text(encoding="utf-8"))
    assert report["result"]["built"] is None


def test_primed_checks_write_one_table_each(tmp_path):
    config = write_oracle(tmp_path, ["check-primed"])
    out = tmp_path / "out"
    assert main(["run", str(config), "--out", str(out), "--format", "csv"]) == EXIT_PASS
    assert sorted(p.name for p in out.iterdir()) == [
        "check-primed-i.csv",
        "check-primed-ii.csv",
        "check-primed-iii.csv",
    ]


def test_snake_config(tmp_path):
    path = tmp_path / "snake.toml"
    path.write_text(
        '[snake]\nlambda = 2\ntargets = 8\n\n[run]\ncommands = ["check-i", "check-primed"]\n',
        encoding="utf-8",
    )
    assert main(["run", str(path), "--out", str(tmp_path / "out")]) == EXIT_PASS


@pytest.mark.parametrize(
    "text",
    [
        '[snake]\nlambda = 1\n',
        '[scenario]\nkind = \n',
        '[snake]\nspace = "s"\nbudget = 0.5\n',
    ],
)
def test_errors_exit_with_one(tmp_path, text):
    path = tmp_path / "bad.toml"
    path.write_text(text, encoding="utf-8")
    assert main(["run", str(path), "--out", str(tmp_path / "out")]) == EXIT_ERROR
    assert not (tmp_path / "out").exists()


def test_missing_config_exits_with_one(tmp_path):
    assert main(["run", str(tmp_path / "nope.toml")]) == EXIT_ERROR


def test_horizon_override_is_validated(tmp_path):
    config = write_oracle(tmp_path, ["check-iii"])
    assert main(["run", str(config), "--horizon", "0"]) == EXIT_ERROR


def test_request_commands_override_the_file(tmp_path):
    config = write_oracle(tmp_path, ["check-i", "check-ii"])
    out = tmp_path / "out"
    request = RunRequest(config, commands=(parse_command("check-iii"),), output=out, mode="float")
    assert run(request) == EXIT_PASS
    assert [p.name for p in out.iterdir()] == ["check-iii.json"]
    report = json.loads((out / "check-iii.json").read_text(encoding="utf-8"))
    assert report["scenario"]["mode"] == "float"


def test_output_directory_resolution(tmp_path, monkeypatch):
    assert resolve_output_dir(tmp_path) == tmp_path
    monkeypatch.setenv(OUT_DIR_ENV, str(tmp_path / "env"))
    assert resolve_output_dir(None) == tmp_path / "env"
    monkeypatch.delenv(OUT_DIR_ENV)
    monkeypatch.chdir(tmp_path)
    assert resolve_output_dir(None).name == DEFAULT_OUT_DIR


def test_parser():
    args = build_parser().parse_args(["run", "c.toml", "--exact", "-vv", "--horizon", "3"])
    assert (args.mode, args.verbose, args.horizon, args.format) == ("exact", 2, 3, None)
    with pytest.raises(SystemExit):
        build_parser().parse_args(["run", "c.toml", "--exact", "--float"])
    with pytest.raises(SystemExit):
        build_parser().parse_args([])
