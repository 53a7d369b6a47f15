"""End-to-end command-line runs: formats, exit codes, determinism."""

import json
import math
import subprocess
import sys

import numpy as np
import pytest

from eitlab import ControlParams, MediumParams, steady_state

SWEEP_COLUMNS = ("delta_p,chi1,chi2,chi1_norm,chi2_norm,"
                 "n1,n2,vg_exact,vg_eit,eit_valid")


def run_cli(*args, env=None):
    import os
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run([sys.executable, "-m", "eitlab.cli", *args],
                          capture_output=True, text=True, env=full_env)


def read_csv(path):
    provenance, columns, rows = {}, None, []
    for line in path.read_text().splitlines():
        if line.startswith("#"):
            key, _, value = line[1:].partition("=")
            provenance[key.strip()] = value.strip()
        elif columns is None:
            columns = line.split(",")
        else:
            rows.append([math.inf if v == "inf" else float(v)
                         for v in line.split(",")])
    return provenance, columns, rows


class TestSweep:
    def test_preset_sweep_contract(self, tmp_path):
        out = tmp_path / "fig2c.csv"
        result = run_cli("sweep", "--preset", "fig2c", "--out", str(out))
        assert result.returncode == 0
        provenance, columns, rows = read_csv(out)
        assert ",".join(columns) == SWEEP_COLUMNS
        assert len(rows) == 2001
        assert provenance["preset"] == "fig2c"
        assert provenance["medium.g_sqrt_n"] == "100"
        assert provenance["control.omega_1"] == "1"
        # rows ordered by probe detuning, absorption strictly positive
        dps = [r[0] for r in rows]
        assert dps == sorted(dps)
        assert all(r[2] > 0 for r in rows)

    def test_json_format(self, tmp_path):
        out = tmp_path / "fig2c.json"
        result = run_cli("sweep", "--preset", "fig2c", "--format", "json",
                         "--out", str(out))
        assert result.returncode == 0
        doc = json.loads(out.read_text())
        assert doc["columns"][0] == "delta_p"
        assert len(doc["rows"]) == 2001
        assert doc["provenance"]["command"] == "sweep"

    def test_stdout_default(self):
        result = run_cli("sweep", "--preset", "fig2c")
        assert result.returncode == 0
        assert SWEEP_COLUMNS in result.stdout

    def test_byte_identical_across_thread_counts(self, tmp_path):
        outputs = []
        for threads in ("1", "7"):
            out = tmp_path / f"t{threads}.csv"
            result = run_cli("sweep", "--preset", "fig2c", "--out", str(out),
                             env={"EITLAB_THREADS": threads})
            assert result.returncode == 0
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1]


class TestWindows:
    def test_merged_window_preset(self, tmp_path):
        out = tmp_path / "w.csv"
        result = run_cli("windows", "--preset", "fig3d", "--out", str(out))
        assert result.returncode == 0
        _, columns, rows = read_csv(out)
        assert columns == ["center", "left_edge", "right_edge", "width",
                           "min_chi2", "slope_chi1_at_center"]
        assert len(rows) == 1
        assert rows[0][1] < 0.0 < rows[0][2]

    def test_two_window_preset(self, tmp_path):
        out = tmp_path / "w.csv"
        assert run_cli("windows", "--preset", "fig3a", "--out", str(out)).returncode == 0
        _, _, rows = read_csv(out)
        assert len(rows) == 2


class TestVg:
    def test_vg_preset(self, tmp_path):
        out = tmp_path / "vg.csv"
        result = run_cli("vg", "--preset", "fig4a_synced", "--out", str(out))
        assert result.returncode == 0
        _, columns, rows = read_csv(out)
        assert columns == ["axis_value", "vg_eit", "vg_exact", "eit_valid"]
        assert len(rows) == 200
        vg = [r[1] for r in rows]
        assert vg == sorted(vg)


class TestEvolve:
    def test_trajectory_matches_steady_state(self, tmp_path):
        cfg = tmp_path / "run.json"
        cfg.write_text(json.dumps({
            "preset": "fig2c",
            "delta_p": 0.0,
            "drive": 1.0,
            "t_end": 100.0,
        }))
        out = tmp_path / "traj.csv"
        result = run_cli("evolve", "--config", str(cfg), "--out", str(out))
        assert result.returncode == 0
        _, columns, rows = read_csv(out)
        assert columns == ["t", "re_a", "im_a", "re_c1", "im_c1", "re_c2", "im_c2"]
        target = steady_state(MediumParams(), ControlParams(1.0, 1.0), 0.0, 1.0)
        last = rows[-1]
        final_a = complex(last[1], last[2])
        assert abs(final_a - target.mean_a_op) / abs(target.mean_a_op) < 1e-6
        final_c1 = complex(last[3], last[4])
        assert abs(final_c1 - target.mean_c1) / abs(target.mean_c1) < 1e-6


class TestRamp:
    def test_ramp_run(self, tmp_path):
        cfg = tmp_path / "ramp.json"
        cfg.write_text(json.dumps({
            "schedule": {"omega_1": [[0.0, 100.0], [1.0, 0.01]],
                         "omega_2": [[0.0, 100.0], [1.0, 0.01]]},
            "n_samples": 101,
        }))
        out = tmp_path / "ramp.csv"
        result = run_cli("ramp", "--config", str(cfg), "--out", str(out))
        assert result.returncode == 0
        _, columns, rows = read_csv(out)
        assert columns == ["t", "omega_1", "omega_2", "vg_eit"]
        vg = [r[3] for r in rows]
        assert all(b < a for a, b in zip(vg, vg[1:]))


class TestPresetList:
    def test_lists_all(self):
        result = run_cli("preset-list")
        assert result.returncode == 0
        for name in ("fig2a", "fig3d", "fig4a_synced", "fig4b_weak", "fig5"):
            assert name in result.stdout


class TestExitCodes:
    def test_validation_error_exits_1(self, tmp_path):
        cfg = tmp_path / "bad.json"
        cfg.write_text('{"medium": {"gamma_1": 0}}')
        result = run_cli("sweep", "--config", str(cfg))
        assert result.returncode == 1
        assert "gamma_1" in result.stderr

    def test_unknown_preset_exits_1(self):
        result = run_cli("sweep", "--preset", "fig9z")
        assert result.returncode == 1
        assert "fig9z" in result.stderr

    def test_unknown_command_exits_1(self):
        result = run_cli("transmogrify")
        assert result.returncode == 1

    def test_missing_command_exits_1(self):
        result = run_cli()
        assert result.returncode == 1

    def test_missing_block_exits_1(self):
        result = run_cli("ramp", "--preset", "fig2c")
        assert result.returncode == 1
        assert "schedule" in result.stderr

    def test_unwritable_output_exits_1(self):
        result = run_cli("sweep", "--preset", "fig2c", "--out",
                         "/nonexistent-dir/x.csv")
        assert result.returncode == 1

    def test_numerical_abort_exits_2(self, tmp_path):
        cfg = tmp_path / "stiff.json"
        cfg.write_text(json.dumps({
            "control": {"omega_1": 1e15, "omega_2": 1e15},
            "t_end": 1.0,
            "tol": 1e-12,
        }))
        result = run_cli("evolve", "--config", str(cfg))
        assert result.returncode == 2
        assert "underflow" in result.stderr

    def test_invalid_threads_exits_1(self):
        result = run_cli("sweep", "--preset", "fig2c",
                         env={"EITLAB_THREADS": "many"})
        assert result.returncode == 1
        assert "EITLAB_THREADS" in result.stderr
