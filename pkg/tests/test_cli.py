"""Tests for the command-line front end."""

import json

import pytest

from zerocorr.cli import main, parse_grid, parse_points


def run_cli(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParsers:
    def test_linear_grid(self):
        grid = parse_grid("0..2:5")
        assert list(grid) == [0.0, 0.5, 1.0, 1.5, 2.0]

    def test_log_grid(self):
        grid = parse_grid("1..100:3:log")
        assert grid == pytest.approx([1.0, 10.0, 100.0])

    def test_bad_grid(self):
        import argparse

        with pytest.raises(argparse.ArgumentTypeError):
            parse_grid("nope")

    def test_points(self):
        pts = parse_points("0,0;1+1j,2", 2)
        assert pts == ((0, 0), (1 + 1j, 2))

    def test_points_dimension_mismatch(self):
        import argparse

        with pytest.raises(argparse.ArgumentTypeError):
            parse_points("0,0", 1)


class TestKappaCommand:
    def test_csv_output(self, capsys):
        code, out, err = run_cli(capsys, "kappa", "--m", "1", "--r", "0.5..1:2")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "r,kappa,series,asymptote"
        assert len(lines) == 3

    def test_reruns_identical(self, capsys):
        _, a, _ = run_cli(capsys, "kappa", "--m", "2", "--r", "0.2..3:8")
        _, b, _ = run_cli(capsys, "kappa", "--m", "2", "--r", "0.2..3:8")
        assert a == b

    def test_json_output(self, capsys):
        code, out, _ = run_cli(
            capsys, "kappa", "--m", "1", "--r", "1..1:1", "--format", "json"
        )
        assert code == 0
        rows = json.loads(out)
        assert len(rows) == 1
        assert rows[0]["kappa"] == pytest.approx(0.4735538040324709659)

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "kappa.csv"
        code, out, _ = run_cli(
            capsys, "kappa", "--m", "1", "--r", "1..2:2", "--out", str(target)
        )
        assert code == 0
        assert out == ""
        text = target.read_text(encoding="utf-8")
        assert text.startswith("r,kappa")


class TestCorrelateCommand:
    def test_limit_pair(self, capsys):
        code, out, _ = run_cli(
            capsys, "correlate", "--model", "heisenberg-limit",
            "--m", "1", "--n", "2", "--r", "1.0",
        )
        assert code == 0
        row = out.strip().split("\n")[1].split(",")
        normalized = float(row[6])
        assert normalized == pytest.approx(0.4735538040324709659, abs=1e-10)

    def test_numeric_failure_exit_code(self, capsys):
        code, out, err = run_cli(
            capsys, "correlate", "--model", "heisenberg-limit",
            "--m", "1", "--n", "2", "--points", "0;1e-9",
        )
        assert code == 1
        assert "NearSingular" in err

    def test_usage_error_exit_code(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["correlate"])  # missing required --model
        assert info.value.code == 2


class TestConvergeCommand:
    def test_rate_exponent(self, capsys):
        code, out, _ = run_cli(
            capsys, "converge", "--m", "1", "--r", "1.0",
            "--levels", "64..1024:3:log",
        )
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0].endswith("rate_exponent")
        exponent = float(lines[1].split(",")[-1])
        assert exponent > 0.45


class TestMcCommand:
    def test_poisson_calibration(self, capsys):
        code, out, _ = run_cli(
            capsys, "mc", "--N", "400", "--samples", "400", "--window", "4.0",
            "--bins", "0.5..2.5:5", "--poisson", "--seed", "3",
        )
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0].startswith("bin_left,bin_right,count")
        assert len(lines) == 5

    def test_roots_small_run(self, capsys):
        code, out, _ = run_cli(
            capsys, "mc", "--N", "100", "--samples", "20", "--window", "2.0",
            "--bins", "0.4..1.2:3", "--seed", "5",
        )
        assert code == 0
        rows = [line.split(",") for line in out.strip().split("\n")[1:]]
        for row in rows:
            assert float(row[3]) > 0  # normalizer positive


class TestKernelCheckCommand:
    def test_decay(self, capsys):
        code, out, _ = run_cli(
            capsys, "kernel-check", "--m", "1", "--levels", "100..400:2:log",
            "--grid-extent", "1.0", "--grid-steps", "3",
        )
        assert code == 0
        lines = out.strip().split("\n")
        devs = [float(line.split(",")[1]) for line in lines[1:]]
        assert devs[1] < devs[0]


class TestConnectedCommand:
    def test_pair(self, capsys):
        code, out, _ = run_cli(
            capsys, "connected", "--m", "1", "--points", "0;1.0",
        )
        assert code == 0
        row = out.strip().split("\n")[1].split(",")
        t2 = float(row[1])
        assert t2 == pytest.approx(0.4735538040324709659 - 1.0, abs=1e-10)
