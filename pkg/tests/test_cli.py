from pathlib import Path

import orjson
import pandas as pd
import pytest
from pydantic import ValidationError

from diagonal_invariants import get_settings
from diagonal_invariants.cli import RunConfig, run
from diagonal_invariants.resolver import ASSERTED
from main import main

ROOT: Path = Path(__file__).parent.parent


def _load(path: Path) -> dict:
    return orjson.loads(path.read_bytes())


def test_graphs_report(tmp_path):
    config = RunConfig(command="graphs", n=4, l=3, out=tmp_path)
    assert run(config) == 0
    report = _load(tmp_path / "graphs.json")
    assert report["schema"] == 1
    assert report["counts"] == {"3": {"graphs": 20, "classes": 3}}
    assert {row["name"] for row in report["classes"]} == {"A3", "B3", "K3"}
    metadata = _load(tmp_path / "graphs_metadata.json")
    assert metadata["verdict"] is None
    assert metadata["result_filenames"] == [str(tmp_path / "graphs.json")]


def test_reports_are_byte_stable(tmp_path):
    for name in ("first", "second"):
        assert run(RunConfig(command="graphs", n=4, out=tmp_path / name)) == 0
    assert (tmp_path / "first" / "graphs.json").read_bytes() == (tmp_path / "second" / "graphs.json").read_bytes()


def test_table1_as_csv(tmp_path):
    assert run(RunConfig(command="table1", out=tmp_path, format="csv")) == 0
    frame = pd.read_csv(tmp_path / "table1.csv")
    assert list(frame["graph"]) == ["C4uL", "K4"]
    assert len(frame.columns) == 12


def test_table2_verdict(tmp_path):
    assert run(RunConfig(command="table2", out=tmp_path)) == 0
    assert _load(tmp_path / "table2_metadata.json")["verdict"] is True


def test_resolution_check_writes_every_report(tmp_path):
    assert run(RunConfig(command="resolution-check", n=3, deg=1, out=tmp_path)) == 0
    for name in ("resolution-report", "prop211-report", "exact-l211-report", "atilde-report"):
        assert (tmp_path / f"{name}.json").exists()
    report = _load(tmp_path / "resolution-report.json")
    assert report["verdict"] is True
    assert [row["dim"] for row in report["per_degree"] if row["degree"] == 1] == [2, 4, 2]


def test_exactness_rows_are_cached(tmp_path, monkeypatch):
    monkeypatch.setenv("DIAG_CACHE_DIR", str(tmp_path / "cache"))
    get_settings.cache_clear()
    assert run(RunConfig(command="resolution-check", n=3, deg=1, out=tmp_path / "first")) == 0
    assert (tmp_path / "cache" / "resolution-3-degree1.json").exists()
    assert run(RunConfig(command="resolution-check", n=3, deg=1, out=tmp_path / "second")) == 0
    first = (tmp_path / "first" / "resolution-report.json").read_bytes()
    assert first == (tmp_path / "second" / "resolution-report.json").read_bytes()


def test_ideal_check(tmp_path):
    assert run(RunConfig(command="inv2k-check", n=2, k=1, deg=3, out=tmp_path, format="csv")) == 0
    frame = pd.read_csv(tmp_path / "inv2k-report.csv")
    assert list(frame["degree"]) == [0, 1, 2, 3]
    assert frame["agree"].all()


def test_experiment_rows_do_not_decide_the_verdict(tmp_path, monkeypatch):
    monkeypatch.setitem(ASSERTED, "inv2k", {3})
    assert run(RunConfig(command="inv2k-check", n=2, k=1, deg=2, out=tmp_path)) == 0
    report = _load(tmp_path / "inv2k-report.json")
    assert report["experiment"] is True
    assert report["verdict"] is None
    assert all(row["experiment"] for row in report["rows"])


def test_euler_on_the_plane(tmp_path):
    assert run(RunConfig(command="euler", surface=ROOT / "surfaces" / "p2.yaml", out=tmp_path)) == 0
    report = _load(tmp_path / "euler-report.json")
    assert [r["value"] for r in report["reports"]] == [1, 0]
    assert report["c2"] == 3


def test_regbound_guard_is_an_error(tmp_path):
    assert run(RunConfig(command="regbound", n=9, mode="product", out=tmp_path)) == 2
    assert not (tmp_path / "regbound_metadata.json").exists()


def test_regbound_report(tmp_path):
    assert run(RunConfig(command="regbound", n=3, k=2, w=-3, out=tmp_path)) == 0
    report = _load(tmp_path / "regbound-report.json")
    assert report["bound"] == 8
    assert report["plane_bound"] == 8


def test_run_config_from_file_with_overrides():
    config = RunConfig.from_file(ROOT / "run_configs" / "resolution3.yaml", deg=1)
    assert config.command == "resolution-check"
    assert config.n == 3
    assert config.deg == 1


@pytest.mark.parametrize(
    "arguments",
    [
        {"command": "resolution-check", "n": 5},
        {"command": "euler"},
        {"command": "graphs", "n": 7},
        {"command": "unknown"},
        {"command": "graphs", "jobs": 0},
    ],
)
def test_run_config_rejects(arguments):
    with pytest.raises(ValidationError):
        RunConfig(**arguments)


def test_run_file_supplies_required_flags(monkeypatch):
    monkeypatch.chdir(ROOT)
    config = RunConfig.model_validate({"command": "euler", "config": Path("run_configs/euler_p2.yaml")})
    assert config.surface == Path("surfaces/p2.yaml")


def test_main_with_run_file(tmp_path, monkeypatch):
    monkeypatch.chdir(ROOT)
    assert main(["euler", "--config", "run_configs/euler_p2.yaml", "--out", str(tmp_path)]) == 0
    report = _load(tmp_path / "euler-report.json")
    assert report["c2"] == 3
    assert [r["value"] for r in report["reports"]] == [1, 0]


def test_main_flags_override_run_file(tmp_path, monkeypatch):
    monkeypatch.chdir(ROOT)
    assert main(["resolution-check", "--config", "run_configs/resolution3.yaml", "--deg", "1", "--out", str(tmp_path)]) == 0
    report = _load(tmp_path / "resolution-report.json")
    assert max(row["degree"] for row in report["per_degree"]) == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["graphs", "--n", "7"],
        ["euler"],
        ["resolution-check", "--n", "5"],
    ],
)
def test_main_invalid_configuration_exits_2(tmp_path, monkeypatch, argv):
    monkeypatch.chdir(ROOT)
    assert main([*argv, "--out", str(tmp_path)]) == 2
    assert list(tmp_path.iterdir()) == []
