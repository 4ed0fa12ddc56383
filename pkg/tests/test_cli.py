import json

import numpy as np
import pytest

from steerability import absolute, families, states
from steerability.cli import main


def write_json(path, payload):
    path.write_text(json.dumps(payload))
    return str(path)


def matrix_record(rho):
    return {
        "format": "matrix",
        "matrix": [[[z.real, z.imag] for z in row] for row in np.asarray(rho, dtype=complex)],
    }


def parse_report(text):
    out = {}
    for line in text.splitlines():
        stripped = line.strip()
        if ":" in stripped and not line.startswith("#"):
            key, _, value = stripped.partition(":")
            out[key] = value.strip()
    return out


class TestAnalyze:
    def test_werner_family_report(self, tmp_path, capsys):
        path = write_json(
            tmp_path / "w.json",
            {"format": "family", "family": "werner", "parameters": {"p": 0.8}},
        )
        assert main(["analyze", "--in", path]) == 0
        report = parse_report(capsys.readouterr().out)
        assert float(report["f3_max"]) == pytest.approx(np.sqrt(3) * 0.8, abs=1e-9)
        assert report["in_aus3"] == "false"
        assert report["teleportation_useful"] == "true"
        assert float(report["witness_expectation"]) == pytest.approx(
            1 - np.sqrt(3) * 0.8, abs=1e-9
        )

    def test_maximally_mixed_matrix_report(self, tmp_path, capsys):
        path = write_json(tmp_path / "mm.json", matrix_record(np.eye(4) / 4))
        assert main(["analyze", "--in", path]) == 0
        report = parse_report(capsys.readouterr().out)
        for key in ("f2_max", "f3_max", "f3_global_max", "N", "M"):
            assert float(report[key]) == 0.0
        assert report["in_aus3"] == "true"
        assert "witness_expectation" not in report

    def test_bloch_record(self, tmp_path, capsys):
        path = write_json(
            tmp_path / "b.json",
            {
                "format": "bloch",
                "a": [0, 0, 0],
                "b": [0, 0, 0],
                "T": (-0.5 * np.eye(3)).tolist(),
            },
        )
        assert main(["analyze", "--in", path]) == 0
        report = parse_report(capsys.readouterr().out)
        assert float(report["f3_max"]) == pytest.approx(np.sqrt(3) * 0.5, abs=1e-9)

    def test_byte_identical_reports(self, tmp_path):
        path = write_json(
            tmp_path / "g.json",
            {
                "format": "family",
                "family": "gisin",
                "parameters": {"lambda": 0.8, "theta": 0.3},
            },
        )
        out1, out2 = tmp_path / "r1.txt", tmp_path / "r2.txt"
        assert main(["analyze", "--in", path, "--out", str(out1)]) == 0
        assert main(["analyze", "--in", path, "--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_malformed_json_exits_2(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        assert main(["analyze", "--in", str(path)]) == 2

    def test_missing_file_exits_2(self, tmp_path):
        assert main(["analyze", "--in", str(tmp_path / "absent.json")]) == 2

    def test_two_representations_exit_2(self, tmp_path):
        record = matrix_record(np.eye(4) / 4)
        record["a"] = [0, 0, 0]
        assert main(["analyze", "--in", write_json(tmp_path / "two.json", record)]) == 2

    def test_invalid_state_exits_3(self, tmp_path, capsys):
        path = write_json(
            tmp_path / "neg.json", matrix_record(np.diag([1.5, -0.5, 0, 0]))
        )
        assert main(["analyze", "--in", path]) == 3
        assert "NotPositive" in capsys.readouterr().err

    def test_family_out_of_range_exits_3(self, tmp_path):
        path = write_json(
            tmp_path / "w15.json",
            {"format": "family", "family": "werner", "parameters": {"p": 1.5}},
        )
        assert main(["analyze", "--in", path]) == 3


class TestScan:
    def test_werner_curve_file(self, tmp_path):
        out = tmp_path / "werner.csv"
        code = main(
            ["scan", "--family", "werner", "--from", "0", "--to", "1",
             "--step", "0.01", "--out", str(out)]
        )
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[2] == "param,f3_global_max_minus_1,in_aus3"
        threshold = float(lines[-1].split(":")[1])
        assert abs(threshold - 1 / np.sqrt(3)) < 1e-9
        # parses back losslessly and reproduces the verdicts
        rows = [line.split(",") for line in lines[3:-1]]
        assert len(rows) == 101
        for param, excess, flag in rows:
            verdict = absolute.decide_aus3(families.werner(float(param)))
            assert float(excess) == pytest.approx(verdict.f3_global_max - 1, abs=1e-9)
            assert flag == str(verdict.in_aus3).lower()

    def test_gisin_threshold(self, tmp_path):
        out = tmp_path / "gisin.csv"
        assert main(
            ["scan", "--family", "gisin", "--from", "0", "--to", "1",
             "--step", "0.01", "--out", str(out)]
        ) == 0
        threshold = float(out.read_text().splitlines()[-1].split(":")[1])
        assert abs(threshold - 2 / 3) < 1e-9

    def test_empty_range_exits_2(self):
        assert main(["scan", "--family", "werner", "--from", "1", "--to", "0", "--step", "0.1"]) == 2
        assert main(["scan", "--family", "werner", "--from", "0", "--to", "1", "--step", "0"]) == 2

    def test_unknown_family_exits_2(self):
        assert main(["scan", "--family", "xstate", "--from", "0", "--to", "1", "--step", "0.1"]) == 2


class TestSample:
    def test_deterministic_output(self, capsys):
        assert main(["sample", "--samples", "2000", "--seed", "7"]) == 0
        first = capsys.readouterr().out
        assert main(["sample", "--samples", "2000", "--seed", "7"]) == 0
        assert capsys.readouterr().out == first
        report = parse_report(first)
        assert 0.0 < float(report["fraction"]) < 1.0
        assert report["seed"] == "7"

    def test_small_sample_exits_2(self):
        assert main(["sample", "--samples", "10"]) == 2


class TestVerify:
    def test_battery_passes(self, capsys):
        assert main(["verify", "--trials", "40", "--seed", "1"]) == 0
        out = capsys.readouterr().out
        assert out.count("PASS") == 5  # four properties + overall
        assert "FAIL" not in out

    def test_zero_trials_exits_2(self):
        assert main(["verify", "--trials", "0"]) == 2

    def test_corrupted_pauli_table_fails(self, monkeypatch, capsys):
        # wrong sign on one entry of the Z(x)Z operator breaks the Bloch route
        bad = states.PAULI_AB.copy()
        bad[2, 2, 0, 0] *= -1
        monkeypatch.setattr(states, "PAULI_AB", bad)
        assert main(["verify", "--trials", "10", "--seed", "1"]) == 1
        assert "FAIL" in capsys.readouterr().out


class TestUsage:
    def test_no_command_exits_2(self):
        with pytest.raises(SystemExit) as err:
            main([])
        assert err.value.code == 2

    def test_bad_number_exits_2(self):
        with pytest.raises(SystemExit) as err:
            main(["sample", "--samples", "many"])
        assert err.value.code == 2
