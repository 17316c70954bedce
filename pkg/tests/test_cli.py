"""CLI tests: config parsing, CSV contracts, commands and exit codes."""

import math
import os

import numpy as np
import pytest

from fdtd_stability import cli
from fdtd_stability.cli import (
    RunConfig,
    build_verify_plan,
    emit_csv,
    main,
    parse_config,
    run_verify,
    serialize_config,
)
from fdtd_stability.errors import InvalidInputError, NumericalFailureError

WATER_CONFIG = """
# minimal single-point analysis
command = analyze
scheme = debye-joseph
eps_inf = 1.8
eps_s = 81.0
t_r = 9.4e-12
k = 1e-15
h = 1e-6
"""


def test_parse_minimal_config():
    cfg = parse_config(WATER_CONFIG)
    assert cfg.command == "analyze"
    assert cfg.scheme == "debye-joseph"
    assert cfg.eps_inf == 1.8 and cfg.eps_s == 81.0
    assert cfg.t_r == 9.4e-12 and cfg.k == 1e-15 and cfg.h == 1e-6


def test_parse_rejects_unknown_key():
    with pytest.raises(InvalidInputError, match="unknown key"):
        parse_config("command = analyze\nepsilon = 2\n")


def test_parse_reports_line_numbers():
    with pytest.raises(InvalidInputError, match="line 3"):
        parse_config("command = analyze\nscheme = debye-young\nk = fast\n")


def test_missing_eps_inf_named(tmp_path, capsys):
    rc = main(["analyze", "--scheme", "debye-joseph", "--eps-s", "81.0",
               "--t-r", "9.4e-12", "--k", "1e-15", "--h", "1e-6"])
    assert rc == 2
    assert "eps_inf" in capsys.readouterr().err


def test_eps_ordering_constraint_reported(capsys):
    rc = main(["analyze", "--scheme", "debye-joseph", "--eps-inf", "1.8",
               "--eps-s", "1.0", "--t-r", "9.4e-12", "--k", "1e-15",
               "--h", "1e-6"])
    assert rc == 2
    assert "eps_s" in capsys.readouterr().err


def test_config_round_trip():
    cfg = RunConfig(command="simulate", scheme="lorentz-young", eps_inf=1.5,
                    eps_s=3.0, omega1=2 * math.pi * 5e10, nu=1e10, k=1e-13,
                    h=1e-3, dim=2, polarization="tm", xi=1.5, xi_y=0.75,
                    steps=500, grid=32, output="out.csv", empirical=True)
    assert parse_config(serialize_config(cfg)) == cfg


def test_csv_float_round_trip(tmp_path):
    values = [math.pi, 1.88e-11, 2.0 / 3.0, 1e-300]
    path = tmp_path / "floats.csv"
    emit_csv([(v,) for v in values], str(path), ("x",))
    lines = path.read_text().splitlines()
    assert lines[0] == "x"
    for raw, v in zip(lines[1:], values):
        assert float(raw) == v


def test_csv_header_only(tmp_path):
    path = tmp_path / "empty.csv"
    emit_csv([], str(path), cli.VERDICT_HEADER)
    assert path.read_text() == ",".join(cli.VERDICT_HEADER) + "\n"


def test_output_dir_env_override(tmp_path, monkeypatch):
    monkeypatch.setenv(cli.OUTPUT_DIR_ENV, str(tmp_path))
    final = emit_csv([(1.0,)], "sub.csv", ("x",))
    assert final == str(tmp_path / "sub.csv")
    assert os.path.exists(final)


def test_analyze_deterministic_output(tmp_path, capsys):
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    args = ["analyze", "--scheme", "debye-joseph", "--eps-inf", "1.8",
            "--eps-s", "81.0", "--t-r", "9.4e-12", "--k", "1e-15",
            "--h", "1e-6"]
    assert main(args + ["--output", str(out1)]) == 0
    assert main(args + ["--output", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_analyze_unstable_point_still_succeeds(tmp_path, capsys, water=None):
    from fdtd_stability import MediumModel
    medium = MediumModel.debye(1.8, 81.0, 9.4e-12)
    h = 1e-6
    k = 1.01 * h / medium.c_inf
    out = tmp_path / "unstable.csv"
    rc = main(["analyze", "--scheme", "debye-joseph", "--eps-inf", "1.8",
               "--eps-s", "81.0", "--t-r", "9.4e-12", "--k", f"{k:.17g}",
               "--h", str(h), "--output", str(out)])
    assert rc == 0
    header, row = out.read_text().splitlines()
    assert header == ",".join(cli.VERDICT_HEADER)
    fields = row.split(",")
    assert fields[0] == "debye-joseph"
    assert fields[9] == "false"          # stable column
    assert float(fields[11]) > 1.0       # max root modulus


def test_analyze_with_config_file(tmp_path, capsys):
    cfg_path = tmp_path / "water.cfg"
    cfg_path.write_text(WATER_CONFIG)
    rc = main(["analyze", "--config", str(cfg_path)])
    assert rc == 0
    assert "stable" in capsys.readouterr().out


def test_scan_command(tmp_path, capsys):
    out = tmp_path / "scan.csv"
    rc = main(["scan", "--scheme", "debye-joseph", "--eps-inf", "1.8",
               "--eps-s", "81.0", "--t-r", "9.4e-12", "--k", "1e-15",
               "--h", "1e-6", "--vary", "q", "--start", "0.0",
               "--stop", "4.5", "--count", "10", "--output", str(out)])
    assert rc == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 11
    stable_flags = [line.split(",")[9] for line in lines[1:]]
    assert "true" in stable_flags and "false" in stable_flags


def test_simulate_command(tmp_path, capsys):
    out = tmp_path / "growth.csv"
    rc = main(["simulate", "--scheme", "debye-joseph", "--eps-inf", "1.8",
               "--eps-s", "81.0", "--t-r", "9.4e-12", "--k", "1e-15",
               "--h", "1e-6", "--steps", "200", "--output", str(out)])
    assert rc == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "step,norm,ratio"
    assert len(lines) == 202  # header + steps + initial state
    first = lines[1].split(",")
    assert int(first[0]) == 0 and float(first[2]) == 1.0


def test_tables_command(capsys):
    assert main(["tables"]) == 0
    out = capsys.readouterr().out
    for scheme in ("debye-joseph", "debye-young", "lorentz-joseph",
                   "lorentz-kashiwa", "lorentz-young"):
        assert scheme in out
    assert "BAD" not in out


def test_tables_single_scheme(capsys):
    assert main(["tables", "--scheme", "lorentz-kashiwa"]) == 0
    out = capsys.readouterr().out
    assert "lorentz-kashiwa: 7 regimes" in out


def test_verify_subsample(tmp_path, capsys):
    out = tmp_path / "verify.csv"
    rc = main(["verify", "--samples", "16", "--output", str(out)])
    assert rc == 0
    lines = out.read_text().splitlines()
    assert lines[0] == ",".join(cli.VERIFY_HEADER)
    assert len(lines) == 17


def test_verify_plan_is_stratified():
    plan = build_verify_plan()
    assert len(plan) >= 200
    schemes = {p.scheme for p in plan}
    assert len(schemes) == 5
    dims = {(p.dim, p.polarization) for p in plan}
    assert (1, None) in dims and (2, "te") in dims and (2, "tm") in dims
    regimes = {p.regime for p in plan}
    assert {"stable", "unstable", "near-boundary", "resonance"} <= regimes


def test_analyze_2d_with_empirical(tmp_path, capsys):
    out = tmp_path / "tm.csv"
    rc = main(["analyze", "--scheme", "lorentz-kashiwa", "--eps-inf", "1.0",
               "--eps-s", "2.25", "--omega1", "4e16", "--nu", "0.56e16",
               "--k", "1.5e-17", "--h", "1e-8", "--dim", "2",
               "--polarization", "tm", "--xi", "1.5", "--xi-y", "0.75",
               "--empirical", "--steps", "150", "--grid", "16",
               "--output", str(out)])
    assert rc == 0
    text = capsys.readouterr().out
    assert "empirical" in text
    assert out.exists()


def test_simulate_2d_te(capsys):
    rc = main(["simulate", "--scheme", "debye-young", "--eps-inf", "1.8",
               "--eps-s", "81.0", "--t-r", "9.4e-12", "--k", "1e-15",
               "--h", "1e-6", "--dim", "2", "--polarization", "te",
               "--steps", "120", "--grid", "12"])
    assert rc == 0
    assert "bounded" in capsys.readouterr().out


def test_unknown_command_exits_2(capsys):
    assert main([]) == 2


def test_numerical_failure_maps_to_exit_3(monkeypatch, capsys):
    def boom(*a, **kw):
        raise NumericalFailureError("synthetic failure")
    monkeypatch.setattr(cli, "classify_point", boom)
    rc = main(["analyze", "--scheme", "debye-joseph", "--eps-inf", "1.8",
               "--eps-s", "81.0", "--t-r", "9.4e-12", "--k", "1e-15",
               "--h", "1e-6"])
    assert rc == 3
    assert "numerical failure" in capsys.readouterr().err
