from __future__ import annotations

import json
import math

import pandas as pd
import pytest
from typer.testing import CliRunner

from fairbound.cli import app
from fairbound.cli.commands import bounds as bounds_command
from fairbound.cli.commands import oracle as oracle_command
from fairbound.errors import NumericalInconsistencyError, OracleError
from fairbound.io import RunReport
from fairbound.measure.examples import build_example_instance

runner = CliRunner()


@pytest.fixture
def mixed_file(tmp_path):
    path = tmp_path / "mixed.json"
    build_example_instance(path, "mixed")
    return path


@pytest.fixture
def identical_file(tmp_path):
    path = tmp_path / "identical.json"
    build_example_instance(path, "identical")
    return path


def _payload(result) -> str:
    assert result.exit_code == 0, result.output
    return result.stdout[result.stdout.index("{") :]


def _report(result) -> RunReport:
    return RunReport.from_json(_payload(result))


def test_example_instance_command(tmp_path):
    out = tmp_path / "linear.json"
    result = runner.invoke(app, ["example-instance", "--kind", "linear", "-o", str(out)])
    assert result.exit_code == 0
    assert len(json.loads(out.read_text())["agents"]) == 2
    assert runner.invoke(app, ["example-instance", "--kind", "nope", "-o", str(out)]).exit_code == 2


def test_list_modes():
    result = runner.invoke(app, ["list-modes"])
    assert result.exit_code == 0
    assert "random -" in result.stdout and "subgradient -" in result.stdout


def test_bounds_legut(mixed_file):
    report = _report(runner.invoke(app, ["bounds", str(mixed_file), "--legut"]))
    assert report.mode == "legut"
    assert report.lower == pytest.approx(1.3437, abs=5e-4)
    assert report.upper == pytest.approx(1.6594, abs=5e-4)
    assert report.cone_status != "outside"


def test_bounds_from_weight_list(mixed_file):
    args = ["bounds", str(mixed_file), "--beta", "0.4,0.3,0.3", "--beta", "0.3,0.6,0.1", "--beta", "1/3,1/3,1/3"]
    report = _report(runner.invoke(app, args))
    assert report.cone_status == "outside"
    assert report.lower is None and report.supporting == []
    assert report.uncertified_r == pytest.approx(1.4656, abs=5e-4)
    assert report.upper == pytest.approx(1.5443, abs=5e-4)

    args = ["bounds", str(mixed_file), "--beta", "1,0,0", "--beta", "0,1,0", "--beta", "1/3,1/3,1/3"]
    report = _report(runner.invoke(app, args))
    assert report.cone_status != "outside"
    assert report.uncertified_r is None
    assert report.lower == pytest.approx(1.3437, abs=5e-4)
    assert len(report.supporting) == 3
    assert report.supporting[2].beta == pytest.approx([1 / 3] * 3)


def test_bounds_cone_failure_reports_upper_only(mixed_file):
    report = _report(runner.invoke(app, ["bounds", str(mixed_file), "--beta", "0.3,0.6,0.1"]))
    assert report.cone_status == "outside"
    assert report.lower is None
    assert report.upper == pytest.approx(0.6375 / (1 / 3), abs=1e-3)


def test_invalid_instance_exits_with_code_2(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(
        json.dumps(
            {
                "claims": [0.5, 0.5],
                "agents": [
                    {"pieces": [{"interval": [0, 0.4], "coeffs": [1]}, {"interval": [0.5, 1], "coeffs": [1]}]},
                    {"pieces": [{"interval": [0, 1], "coeffs": [1]}]},
                ],
            }
        )
    )
    result = runner.invoke(app, ["bounds", str(path)])
    assert result.exit_code == 2
    assert "gap" in result.output
    assert runner.invoke(app, ["oracle", str(tmp_path / "missing.json")]).exit_code == 2


def test_claims_override(mixed_file):
    assert runner.invoke(app, ["bounds", str(mixed_file), "--alpha", "0.5,0.5,0"]).exit_code == 2
    report = _report(runner.invoke(app, ["bounds", str(mixed_file), "--alpha", "0.5,0.25,0.25", "--legut"]))
    assert report.alpha == pytest.approx([0.5, 0.25, 0.25])


def test_refine_without_iterations(mixed_file):
    report = _report(runner.invoke(app, ["refine", str(mixed_file), "--iters", "0"]))
    assert report.iterations == 0
    assert report.lower == pytest.approx(1.3437, abs=5e-4)


def test_refine_is_reproducible(mixed_file):
    args = ["refine", str(mixed_file), "--iters", "15", "--seed", "5", "--no-timing"]
    first = runner.invoke(app, args)
    second = runner.invoke(app, args)
    assert _payload(first) == _payload(second)
    assert "wall_time" not in json.loads(_payload(first))


def test_refine_trace_and_plotdata(mixed_file, tmp_path):
    trace = tmp_path / "trace.csv"
    report = _report(runner.invoke(app, ["refine", str(mixed_file), "--iters", "10", "--trace", str(trace)]))
    assert report.mode == "random"
    frame = pd.read_csv(trace)
    assert len(frame) == 11
    assert frame["lower"].iloc[-1] == pytest.approx(report.lower, rel=1e-12)

    out = tmp_path / "plots"
    result = runner.invoke(app, ["plotdata", str(mixed_file), "--out", str(out), "--trace", str(trace)])
    assert result.exit_code == 0
    curves = pd.read_csv(out / "densities.csv")
    assert len(curves) == 512
    assert list(curves.columns) == ["x", "f_1", "f_2", "f_3"]
    assert (curves["f_1"] == 1.0).all()
    assert curves["f_2"].iloc[-1] == pytest.approx(2.0)
    peak = curves["f_3"].idxmax()
    assert curves["x"][peak] == pytest.approx(0.2, abs=5e-3)
    assert curves["f_3"][peak] == pytest.approx(2.4576, abs=1e-3)
    series = pd.read_csv(out / "bounds.csv")
    assert list(series.columns) == ["iteration", "lower", "upper"]
    assert len(series) == 11


def test_plotdata_unwritable_output(mixed_file, tmp_path):
    blocker = tmp_path / "blocker"
    blocker.write_text("")
    result = runner.invoke(app, ["plotdata", str(mixed_file), "--out", str(blocker)])
    assert result.exit_code == 3


def test_refine_subgradient_command(mixed_file):
    report = _report(runner.invoke(app, ["refine", str(mixed_file), "--mode", "subgradient"]))
    assert report.mode == "subgradient"
    assert report.gap_met
    assert report.upper - report.lower <= 1e-3
    assert runner.invoke(app, ["refine", str(mixed_file), "--mode", "annealing"]).exit_code == 2


def test_oracle_command(tmp_path):
    path = tmp_path / "identical.json"
    build_example_instance(path, "identical")
    report = _report(runner.invoke(app, ["oracle", str(path), "--cells", "20"]))
    assert report.oracle_value == pytest.approx(1.0, abs=1e-9)

    path = tmp_path / "linear.json"
    build_example_instance(path, "linear")
    report = _report(runner.invoke(app, ["oracle", str(path), "--cells", "400"]))
    assert report.oracle_value == pytest.approx(math.sqrt(5.0) - 1.0, abs=5e-3)
    assert report.oracle_cells == 400


def test_bounds_with_oracle(tmp_path):
    path = tmp_path / "linear.json"
    build_example_instance(path, "linear")
    report = _report(runner.invoke(app, ["bounds", str(path), "--oracle-cells", "100"]))
    assert report.lower <= report.oracle_value + 0.05
    assert report.oracle_value <= report.upper + 0.05


def test_bounds_normalize_flag(tmp_path):
    path = tmp_path / "scaled.json"
    path.write_text(
        json.dumps(
            {
                "claims": [0.5, 0.5],
                "agents": [
                    {"pieces": [{"interval": [0, 1], "coeffs": [2.0]}]},
                    {"pieces": [{"interval": [0, 1], "coeffs": [0.0, 2.0]}]},
                ],
            }
        )
    )
    assert _report(runner.invoke(app, ["bounds", str(path)])).mode == "single"
    assert _report(runner.invoke(app, ["bounds", str(path), "--normalize"])).mode == "legut"
    assert runner.invoke(app, ["bounds", str(path), "--legut"]).exit_code == 2


def test_numerical_failures_exit_with_code_2(mixed_file, monkeypatch):
    def fail_oracle(*_args, **_kwargs):
        raise OracleError("simplex did not converge within 1 pivots")

    def fail_bounds(*_args, **_kwargs):
        raise NumericalInconsistencyError("Cramer weights disagree with inverse weights")

    monkeypatch.setattr(oracle_command, "oracle_value", fail_oracle)
    result = runner.invoke(app, ["oracle", str(mixed_file), "--cells", "10"])
    assert result.exit_code == 2
    assert "numerical failure" in result.output

    monkeypatch.setattr(bounds_command, "_compute", fail_bounds)
    result = runner.invoke(app, ["bounds", str(mixed_file)])
    assert result.exit_code == 2
    assert "Cramer" in result.output


def test_oracle_needs_a_cell_per_agent(mixed_file):
    assert runner.invoke(app, ["oracle", str(mixed_file), "--cells", "2"]).exit_code == 2


def test_refine_accepts_gap_option(identical_file):
    args = ["refine", str(identical_file), "--mode", "subgradient", "--gap", "1e-6", "--iters", "5"]
    report = _report(runner.invoke(app, args))
    assert report.gap_met
    assert report.upper - report.lower <= 1e-6
