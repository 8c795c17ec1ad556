import json
from pathlib import Path

import numpy as np
import pytest

import splitwave.harness as hn
from splitwave.cli import run_cli


def write_config(tmp_path, raw, name="cfg.json"):
    path = tmp_path / name
    path.write_text(json.dumps(raw))
    return path


@pytest.fixture
def soliton_config(tmp_path):
    return write_config(tmp_path, {
        "model": {"kind": "nlse3", "sign": -1},
        "basis": {"type": "fourier", "n": 256, "interval": [-50, 50]},
        "schemes": ["strang", "affine2"],
        "dt_list": [0.2, 0.1],
        "t_final": 1.0,
        "initial": {"type": "nlse-soliton", "eta": 1.0, "c": 0.5},
        "reference": {"type": "exact"},
        "out": "out",
    })


class TestListSchemes:
    def test_prints_all_eight(self, capsys):
        assert run_cli(["list-schemes"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines == ["lie-trotter", "strang", "ruth", "neri", "yoshida6",
                         "affine2", "affine4", "affine6"]


class TestSweepDt:
    def test_writes_csv_with_contract_columns(self, tmp_path, soliton_config):
        assert run_cli(["sweep-dt", "--config", str(soliton_config)]) == 0
        csv_path = tmp_path / "out" / "sweep_dt.csv"
        rows = hn.read_csv(csv_path)
        assert csv_path.read_text().splitlines()[0] == \
            "scheme,dt,err_inf,eps_mass,eps_ham,cost,status"
        assert len(rows) == 4
        assert {r["scheme"] for r in rows} == {"strang", "affine2"}

    def test_deterministic_bytes(self, tmp_path, soliton_config):
        run_cli(["sweep-dt", "--config", str(soliton_config), "--out",
                 str(tmp_path / "a")])
        run_cli(["sweep-dt", "--config", str(soliton_config), "--out",
                 str(tmp_path / "b")])
        assert (tmp_path / "a" / "sweep_dt.csv").read_bytes() == \
            (tmp_path / "b" / "sweep_dt.csv").read_bytes()

    def test_scheme_and_dt_overrides(self, tmp_path, soliton_config):
        out = tmp_path / "c"
        assert run_cli(["sweep-dt", "--config", str(soliton_config),
                        "--scheme", "neri", "--dt", "0.25", "--out", str(out)]) == 0
        rows = hn.read_csv(out / "sweep_dt.csv")
        assert len(rows) == 1
        assert rows[0]["scheme"] == "neri" and rows[0]["dt"] == 0.25

    def test_workers_flag(self, tmp_path, soliton_config):
        out = tmp_path / "w"
        assert run_cli(["sweep-dt", "--config", str(soliton_config),
                        "--workers", "2", "--out", str(out)]) == 0
        assert len(hn.read_csv(out / "sweep_dt.csv")) == 4


class TestEvolve:
    def test_writes_run_and_meta_and_snapshots(self, tmp_path):
        cfg = write_config(tmp_path, {
            "model": {"kind": "nlse3", "sign": -1},
            "basis": {"type": "fourier", "n": 128, "interval": [-50, 50]},
            "scheme": "affine4",
            "dt": 0.1,
            "t_final": 1.0,
            "initial": {"type": "nlse-soliton", "eta": 1.0, "c": 0.5},
            "reference": {"type": "exact"},
            "observers": {"stride": 2, "snapshot_stride": 5},
            "out": "run1",
        })
        assert run_cli(["evolve", "--config", str(cfg)]) == 0
        out = tmp_path / "run1"
        assert (out / "run.csv").exists()
        meta = json.loads((out / "meta.json").read_text())
        assert meta["status"] == "completed"
        assert meta["evals_a"] == 6 * 10
        snaps = sorted((out / "snapshots").glob("snap_*.csv"))
        assert len(snaps) == 3  # t = 0, 0.5, 1.0
        header = (out / "run.csv").read_text().splitlines()[0]
        assert header == "t,err_inf,eps_mass,eps_ham,evals_a,evals_b"

    def test_blowup_exits_3(self, tmp_path):
        cfg = write_config(tmp_path, {
            "model": {"kind": "cgle3", "beta": 0.25, "gamma": -1.0, "epsilon": None},
            "basis": {"type": "hermite", "n": 128, "scaling": 1.0},
            "scheme": "yoshida6",
            "dt": 0.5,
            "t_final": 5.0,
            "initial": {"type": "cgle3-soliton", "beta": 0.25, "G": 1.0},
            "reference": {"type": "exact"},
            "out": "blow",
        })
        assert run_cli(["evolve", "--config", str(cfg)]) == 3
        meta = json.loads((tmp_path / "blow" / "meta.json").read_text())
        assert meta["status"] == "blowup"
        assert meta["blowup_step"] >= 1


class TestStationaryCommand:
    def test_writes_profile_with_residual(self, tmp_path):
        cfg = write_config(tmp_path, {
            "model": {"kind": "fnlse3", "alpha": 1.6, "sign": -1},
            "basis": {"type": "fourier", "n": 2048, "interval": [-80, 80]},
            "t_final": 0.0,
            "initial": {"type": "stationary", "alpha": 1.6, "omega": 1.0},
            "out": "gs",
        })
        assert run_cli(["stationary", "--config", str(cfg)]) == 0
        out = tmp_path / "gs"
        meta = json.loads((out / "psi.json").read_text())
        assert meta["alpha"] == 1.6 and meta["omega"] == 1.0
        assert meta["residual"] <= 1e-12
        assert meta["basis"]["n"] == 2048
        data = (out / "psi.csv").read_text().splitlines()
        assert data[0] == "x,re,im" and len(data) == 2049


class TestReferenceCommand:
    def test_writes_reference_snapshot(self, tmp_path, soliton_config):
        assert run_cli(["reference", "--config", str(soliton_config)]) == 0
        out = tmp_path / "out"
        assert (out / "reference.csv").exists()
        meta = json.loads((out / "reference.json").read_text())
        assert meta["t"] == 1.0


class TestErrorPaths:
    def test_missing_config_file(self, tmp_path, capsys):
        assert run_cli(["sweep-dt", "--config", str(tmp_path / "nope.json")]) == 2
        assert "config error" in capsys.readouterr().err

    def test_invalid_field_reports_and_exits_2(self, tmp_path, capsys):
        cfg = write_config(tmp_path, {
            "model": {"kind": "heat"},
            "basis": {"type": "fourier", "n": 64, "interval": [-1, 1]},
            "t_final": 1.0,
            "initial": {"type": "gaussian"},
        })
        assert run_cli(["sweep-dt", "--config", str(cfg)]) == 2
        assert "model.kind" in capsys.readouterr().err

    def test_evolve_requires_single_scheme(self, tmp_path, soliton_config, capsys):
        assert run_cli(["evolve", "--config", str(soliton_config)]) == 2
        assert "schemes" in capsys.readouterr().err

    def test_exact_reference_rejected_for_gaussian(self, tmp_path, capsys):
        cfg = write_config(tmp_path, {
            "model": {"kind": "nlse3", "sign": -1},
            "basis": {"type": "fourier", "n": 64, "interval": [-10, 10]},
            "scheme": "strang",
            "dt": 0.1,
            "t_final": 1.0,
            "initial": {"type": "gaussian", "amplitude": 1.0, "width": 1.0},
            "reference": {"type": "exact"},
        })
        assert run_cli(["evolve", "--config", str(cfg)]) == 2
        assert "reference" in capsys.readouterr().err


class TestMetricsSelection:
    def test_run_csv_respects_metrics_list(self, tmp_path):
        cfg = write_config(tmp_path, {
            "model": {"kind": "nlse3", "sign": -1},
            "basis": {"type": "fourier", "n": 128, "interval": [-50, 50]},
            "scheme": "strang",
            "dt": 0.1,
            "t_final": 0.5,
            "initial": {"type": "nlse-soliton", "eta": 1.0, "c": 0.5},
            "reference": {"type": "exact"},
            "observers": {"stride": 1, "metrics": ["mass", "err_inf"]},
            "out": "sel",
        })
        assert run_cli(["evolve", "--config", str(cfg)]) == 0
        header = (tmp_path / "sel" / "run.csv").read_text().splitlines()[0]
        assert header == "t,eps_mass,err_inf,evals_a,evals_b"

    def test_invalid_metric_rejected(self, tmp_path, capsys):
        cfg = write_config(tmp_path, {
            "model": {"kind": "nlse3", "sign": -1},
            "basis": {"type": "fourier", "n": 128, "interval": [-50, 50]},
            "scheme": "strang",
            "dt": 0.1,
            "t_final": 0.5,
            "initial": {"type": "nlse-soliton", "eta": 1.0, "c": 0.5},
            "observers": {"metrics": ["momentum"]},
        })
        assert run_cli(["evolve", "--config", str(cfg)]) == 2
        assert "observers.metrics" in capsys.readouterr().err
