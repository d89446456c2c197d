"""Tests for the command-line surface, pool configs and the scaling CSV."""

import json

import pytest

from picog3m import (
    ConfigError,
    FMean,
    Geometric,
    LogF,
    Power,
    PowerF,
    ScalingConfig,
    ScheduleParams,
    Weights,
    new_pool,
    run_scaling,
)
from picog3m.cli import (
    HEADER,
    dump_pool_config,
    format_scaling_csv,
    load_pool_config,
    main,
    parse_pool_config,
    read_scaling_csv,
)

POWER_HALF = {"reserves": [4, 4], "weights": [0.5, 0.5], "mean": {"type": "power", "p": 0.5}}
GEOMETRIC = {"reserves": [4, 4], "weights": [0.5, 0.5], "mean": {"type": "geometric"}}
CONSTANT_SUM = {"reserves": [4, 4], "weights": [0.5, 0.5], "mean": {"type": "power", "p": 1}}


def _write(tmp_path, doc, name="pool.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def _values(out: str) -> dict[str, str]:
    return dict(line.split(": ", 1) for line in out.strip().splitlines())


def test_parse_pool_config_specs() -> None:
    assert parse_pool_config(json.dumps(POWER_HALF)).spec == Power(0.5)
    assert parse_pool_config(json.dumps(GEOMETRIC)).spec == Geometric()
    doc = dict(GEOMETRIC, mean={"type": "fmean", "f": "power", "fp": 0.25})
    assert parse_pool_config(json.dumps(doc)).spec == FMean(PowerF(0.25))
    doc = dict(GEOMETRIC, mean={"type": "fmean", "f": "log"})
    assert parse_pool_config(json.dumps(doc)).spec == FMean(LogF())


def test_parse_pool_config_decimal_weights() -> None:
    text = '{"reserves": [1, 2, 3], "weights": [0.1, 0.2, 0.7], "mean": {"type": "geometric"}}'
    pool = parse_pool_config(text).to_pool()
    assert pool.weights.values == pytest.approx((0.1, 0.2, 0.7), rel=1e-15)


@pytest.mark.parametrize(
    "text, match",
    [
        ("[1, 2]", "JSON object"),
        ("{not json", "not valid JSON"),
        ('{"reserves": [1, 2]}', "missing weights, mean"),
        ('{"reserves": [1, "x"], "weights": [0.5, 0.5], "mean": {"type": "geometric"}}', "reserves"),
        ('{"reserves": [1, 2], "weights": [0.5, 0.5], "mean": {"type": "cubic"}}', "mean.type"),
        ('{"reserves": [1, 2], "weights": [0.5, 0.5], "mean": {"type": "fmean", "f": "exp"}}', "mean.f"),
        ('{"reserves": [1, 2], "weights": [0.5, 0.5], "mean": {"type": "power", "p": 0}}', "invalid mean"),
        ('{"reserves": [1, 2], "weights": [true, 0.5], "mean": {"type": "geometric"}}', "weights"),
    ],
)
def test_parse_pool_config_errors(text: str, match: str) -> None:
    with pytest.raises(ConfigError, match=match):
        parse_pool_config(text)


def test_to_pool_rejects_invalid_pool() -> None:
    doc = dict(POWER_HALF, mean={"type": "power", "p": 1.5})
    with pytest.raises(ConfigError, match="pool-valid"):
        parse_pool_config(json.dumps(doc)).to_pool()
    doc = dict(GEOMETRIC, weights=[0.5, 0.6])
    with pytest.raises(ConfigError, match="sum to 1"):
        parse_pool_config(json.dumps(doc)).to_pool()


def test_pool_config_round_trip(tmp_path) -> None:
    pool = new_pool([0.1, 2.0 / 3.0, 1e6], Weights.of([0.2, 0.3, 0.5]), FMean(PowerF(0.3)))
    path = tmp_path / "pool.json"
    path.write_text(dump_pool_config(pool), encoding="utf-8")
    again = load_pool_config(path)
    assert again.reserves == pool.reserves
    assert again.weights == pool.weights
    assert again.spec == pool.spec


def test_scaling_csv_format_and_round_trip() -> None:
    rows = run_scaling(ScalingConfig(ScheduleParams(4.0, 4.0 / 3.0))).rows
    text = format_scaling_csv(rows)
    lines = text.split("\n")
    assert lines[0] == ",".join(HEADER) == "eps,p,delta1,S_p,S_0,identity_residual"
    assert lines[1].startswith("0.0625,")
    assert text.endswith("\n") and "\r" not in text
    assert len(lines) == len(rows) + 2
    assert read_scaling_csv(text) == rows


def test_read_scaling_csv_rejects_header() -> None:
    with pytest.raises(ConfigError, match="header"):
        read_scaling_csv("eps,p\n1,2\n")


def test_quote_power(tmp_path, capsys) -> None:
    assert main(["quote", _write(tmp_path, POWER_HALF), "--in", "1=5", "--out", "2"]) == 0
    values = _values(capsys.readouterr().out)
    assert float(values["output asset 2"]) == pytest.approx(3.0, rel=1e-12)
    assert float(values["slippage"]) == pytest.approx(2.0 / 3.0, rel=1e-12)
    assert abs(float(values["invariant residual"])) <= 4e-9


def test_quote_geometric(tmp_path, capsys) -> None:
    assert main(["quote", _write(tmp_path, GEOMETRIC), "--in", "1=4", "--out", "2"]) == 0
    values = _values(capsys.readouterr().out)
    assert float(values["output asset 2"]) == pytest.approx(2.0, rel=1e-12)
    assert float(values["slippage"]) == pytest.approx(1.0, rel=1e-12)


def test_quote_infeasible(tmp_path, capsys) -> None:
    assert main(["quote", _write(tmp_path, CONSTANT_SUM), "--in", "1=13", "--out", "2"]) == 3
    assert "infeasible" in capsys.readouterr().err


def test_quote_bad_asset(tmp_path, capsys) -> None:
    assert main(["quote", _write(tmp_path, GEOMETRIC), "--in", "1=1", "--out", "3"]) == 2
    assert "out of range" in capsys.readouterr().err


def test_quote_missing_file(tmp_path, capsys) -> None:
    missing = str(tmp_path / "nope.json")
    assert main(["quote", missing, "--in", "1=1", "--out", "2"]) == 2
    assert capsys.readouterr().err.startswith("picog3m: ")


def test_quote_rejects_bad_amount(tmp_path) -> None:
    with pytest.raises(SystemExit) as exc:
        main(["quote", _write(tmp_path, GEOMETRIC), "--in", "1=abc", "--out", "2"])
    assert exc.value.code == 2


def test_slippage_command(tmp_path, capsys) -> None:
    path = _write(tmp_path, POWER_HALF)
    assert main(["slippage", path, "--in", "1=5", "--out", "2=3"]) == 0
    values = _values(capsys.readouterr().out)
    assert float(values["spot rate"]) == pytest.approx(1.0)
    assert float(values["realized rate"]) == pytest.approx(5.0 / 3.0)
    assert float(values["slippage"]) == pytest.approx(2.0 / 3.0, rel=1e-12)
    assert values["valid trade"] == "yes"
    assert main(["slippage", path, "--in", "1=5", "--out", "2=2"]) == 0
    assert _values(capsys.readouterr().out)["valid trade"] == "no"


def test_schedule_command(capsys) -> None:
    assert main(["schedule", "--C", "4", "--s", "4/3", "--eps", "0.00390625"]) == 0
    values = _values(capsys.readouterr().out)
    assert float(values["p"]) == pytest.approx(0.1, rel=1e-12)
    assert float(values["c"]) == pytest.approx(0.584963, abs=1e-6)
    assert abs(float(values["identity residual"])) <= 1e-9


def test_schedule_decimal_s(capsys) -> None:
    assert main(["schedule", "--C", "4", "--s", "1.333333333333", "--eps", "0.00390625"]) == 0
    values = _values(capsys.readouterr().out)
    assert float(values["p"]) == pytest.approx(0.1, rel=1e-9)
    assert float(values["c"]) == pytest.approx(0.585, abs=1e-3)


@pytest.mark.parametrize(
    "argv, match",
    [
        (["schedule", "--C", "4", "--s", "2.5"], "1 < s < C/2"),
        (["schedule", "--C", "1.5"], "C > 2"),
        (["schedule", "--eps", "1"], "0 < eps < 1"),
    ],
)
def test_schedule_errors(argv: list[str], match: str, capsys) -> None:
    assert main(argv) == 2
    assert match in capsys.readouterr().err


def test_verify_command(capsys) -> None:
    assert main(["verify", "--seed", "42", "--cases", "100"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out
    assert "properties passed (seed=42)" in out


def test_verify_default_case_count(capsys) -> None:
    assert main(["verify", "--seed", "42", "--cases", "10000"]) == 0
    assert "FAIL" not in capsys.readouterr().out


def test_verify_with_config(tmp_path, capsys) -> None:
    path = _write(tmp_path, POWER_HALF)
    assert main(["verify", "--seed", "3", "--cases", "50", "--config", path]) == 0
    assert "config pool round trip" in capsys.readouterr().out


def test_verify_rejects_invalid_pool(tmp_path, capsys) -> None:
    path = _write(tmp_path, dict(POWER_HALF, mean={"type": "power", "p": 1.5}))
    assert main(["verify", "--config", path]) == 2
    assert "pool-valid" in capsys.readouterr().err


def test_verify_rejects_zero_cases(capsys) -> None:
    assert main(["verify", "--cases", "0"]) == 2
    assert "--cases" in capsys.readouterr().err


def test_experiment_command(tmp_path, capsys) -> None:
    out = tmp_path / "scaling.csv"
    assert main(["experiment", "--out", str(out)]) == 0
    values = _values(capsys.readouterr().out)
    assert float(values["slope_S"]) == pytest.approx(-0.585, abs=0.05)
    assert float(values["slope_D"]) == pytest.approx(-0.585, abs=0.05)
    assert float(values["slope_S0"]) == pytest.approx(-1.0, abs=0.02)
    text = out.read_text(encoding="utf-8")
    assert text.startswith("eps,p,delta1,S_p,S_0,identity_residual\n")
    assert len(read_scaling_csv(text)) == 37


def test_experiment_is_byte_deterministic(tmp_path) -> None:
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["experiment", "--out", str(a)]) == 0
    assert main(["experiment", "--workers", "3", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_experiment_short_grid(capsys) -> None:
    assert main(["experiment", "--kmin", "4", "--kmax", "5"]) == 2
    assert "at least 8" in capsys.readouterr().err


def test_experiment_unwritable_path(tmp_path) -> None:
    target = tmp_path / "missing-dir" / "out.csv"
    assert main(["experiment", "--out", str(target)]) == 2


def test_experiment_slope_band_failure(capsys) -> None:
    # a shallow grid keeps the fit away from its asymptote
    assert main(["experiment", "--kmin", "0.1", "--kmax", "0.8", "--count", "8", "--tail", "1"]) == 1
    assert "outside the bands" in capsys.readouterr().err
