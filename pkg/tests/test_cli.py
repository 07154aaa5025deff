import csv
import io
import json
import math
import subprocess
import sys

import pytest

from rlzeta import cli
from rlzeta.cli import GridSpec, parse_complex, rows_to_csv, table_rows
from rlzeta.quadrature import DEFAULT_CONFIG


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def text_fields(out):
    return dict(line.split(None, 1) for line in out.strip().splitlines())


class TestParseComplex:
    @pytest.mark.parametrize("text, expected", [
        ("2", 2.0),
        ("0.5+14.134725i", 0.5 + 14.134725j),
        ("0.5 - 3i", 0.5 - 3j),
        ("  1 + i ", 1 + 1j),
        ("-i", -1j),
        ("2j", 2j),
        ("1e-3+2e1i", 0.001 + 20j),
    ])
    def test_accepts(self, text, expected):
        assert parse_complex(text) == expected

    @pytest.mark.parametrize("text", ["", "abc", "1+2k", "nan", "inf+1i"])
    def test_rejects(self, text):
        with pytest.raises(ValueError):
            parse_complex(text)


class TestEval:
    def test_zeta_two(self, capsys):
        code, out, _ = run(capsys, "eval", "--mode", "zeta", "--s", "2", "--x", "0")
        assert code == 0
        fields = text_fields(out)
        assert abs(float(fields["re"]) - math.pi**2 / 6) < 1e-10
        assert abs(float(fields["im"])) < 1e-10
        assert int(fields["n_evals"]) > 0

    def test_pole(self, capsys):
        code, _, err = run(capsys, "eval", "--mode", "zeta", "--s", "1", "--x", "0")
        assert code == 2
        assert "prefactor pole at s = 1" in err

    def test_nonreal_pole(self, capsys):
        code, _, err = run(capsys, "eval", "--mode", "zeta", "--s", f"1+{2 * math.pi / math.log(2)!r}i")
        assert code == 2 and "prefactor pole" in err

    def test_frac(self, capsys):
        code, out, _ = run(capsys, "eval", "--mode", "frac", "--s", "1", "--x", "-1")
        assert code == 0
        assert abs(float(text_fields(out)["re"]) - math.log1p(math.exp(-1.0))) < 1e-10

    def test_json(self, capsys):
        code, out, _ = run(capsys, "eval", "--mode", "eta", "--s", "1", "--format", "json")
        rec = json.loads(out)
        assert code == 0 and abs(rec["re_val"] - math.log(2.0)) < 1e-10

    @pytest.mark.parametrize("argv", [
        ["eval", "--mode", "frac", "--s", "1", "--x", "1"],
        ["eval", "--mode", "eta", "--s", "-1", "--x", "0"],
        ["eval", "--mode", "eta", "--s", "1", "--abs-tol", "1e-20"],
    ])
    def test_domain_errors(self, capsys, argv):
        assert run(capsys, *argv)[0] == 2

    def test_unparseable_s(self, capsys):
        with pytest.raises(SystemExit) as info:
            cli.main(["eval", "--mode", "eta", "--s", "two"])
        assert info.value.code == 2

    def test_nonconvergence(self, capsys):
        code, _, err = run(capsys, "eval", "--mode", "eta", "--s", "0.3+5i",
                           "--max-level", "2", "--abs-tol", "1e-15", "--rel-tol", "1e-15")
        assert code == 3 and "non-convergence" in err


class TestTable:
    def test_row_count(self, capsys):
        code, out, _ = run(capsys, "table", "--mode", "zeta", "--re-s", "2:4:1")
        lines = out.split("\n")
        assert code == 0
        assert lines[0] == ",".join(cli.CSV_FIELDS)
        assert len(out.strip().split("\n")) == 4
        assert "\r" not in out

    def test_pole_row(self, capsys):
        code, out, _ = run(capsys, "table", "--mode", "zeta", "--re-s", "0.5:1.5:0.5")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == 0
        pole = [r for r in rows if r["re_s"] == "1.0"]
        assert len(pole) == 1 and pole[0]["status"] == "pole"
        assert pole[0]["re_val"] == pole[0]["im_val"] == pole[0]["err_est"] == ""
        assert all(r["status"] == "ok" for r in rows if r is not pole[0])

    def test_row_order(self):
        grid = GridSpec((2.0, 3.0, 1.0), (0.0, 1.0, 1.0), (0.0, 1.0, 1.0))
        keys = [(r["re_s"], r["im_s"], r["x"]) for r in table_rows(grid, "eta", DEFAULT_CONFIG)]
        assert keys == sorted(keys) and len(keys) == 8

    def test_json_parity(self, capsys):
        args = ["table", "--mode", "frac", "--re-s", "0.5:2:0.5", "--im-s", "0:1:1", "--x=-1:0:1"]
        _, csv_out, _ = run(capsys, *args)
        _, json_out, _ = run(capsys, *args, "--format", "json")
        records = json.loads(json_out)
        rows = list(csv.DictReader(io.StringIO(csv_out)))
        assert len(records) == len(rows) == 16
        for rec, row in zip(records, rows):
            assert set(rec) == set(cli.CSV_FIELDS)
            assert isinstance(rec["re_val"], float) and isinstance(rec["n_evals"], int)
            assert float(row["re_val"]) == rec["re_val"]
            assert float(row["im_val"]) == rec["im_val"]

    def test_csv_round_trip(self):
        grid = GridSpec((0.5, 1.5, 0.25), (0.0, 14.0, 7.0), (-2.0, 0.0, 2.0))
        rows = table_rows(grid, "frac", DEFAULT_CONFIG)
        parsed = list(csv.DictReader(io.StringIO(rows_to_csv(rows))))
        for row, rec in zip(rows, parsed):
            assert float(rec["re_s"]) == row["re_s"] and float(rec["x"]) == row["x"]
            for key in ("re_val", "im_val", "err_est"):
                if row[key] is None:
                    assert rec[key] == ""
                else:
                    assert float(rec[key]) == row[key]

    def test_deterministic_file(self, capsys, tmp_path):
        paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
        for p in paths:
            assert run(capsys, "table", "--mode", "zeta", "--re-s", "0.5:2:0.5", "--im-s", "0:10:5",
                       "--out", str(p))[0] == 0
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_io_error(self, capsys, tmp_path):
        code, _, err = run(capsys, "table", "--mode", "zeta", "--re-s", "2",
                           "--out", str(tmp_path / "missing" / "t.csv"))
        assert code == 4 and err

    @pytest.mark.parametrize("spec", ["3:2:1", "2:3:0"])
    def test_bad_grid(self, capsys, spec):
        assert run(capsys, "table", "--mode", "zeta", "--re-s", spec)[0] == 2


class TestVerify:
    def test_norm(self, capsys):
        code, out, _ = run(capsys, "verify", "norm")
        lines = [l for l in out.splitlines() if l.startswith("norm")]
        assert code == 0 and len(lines) == 1 and lines[0].endswith("pass")

    def test_semigroup(self, capsys):
        code, out, _ = run(capsys, "verify", "semigroup")
        lines = [l for l in out.splitlines() if l.startswith("semigroup")]
        assert code == 0 and len(lines) == 9
        assert all(l.split()[5] == "pass" for l in lines)
        assert "# 9 checks, 0 failed, 0 skipped" in out

    def test_derivative_pole_skipped(self, capsys):
        code, out, _ = run(capsys, "verify", "derivative", "--s", "1", "--s", "2")
        lines = [l for l in out.splitlines() if l.startswith("derivative")]
        assert code == 0
        assert sum("pole" in l.split() for l in lines) == 3
        assert "prefactor pole at s = 1" in out

    def test_failure_exit_code(self, capsys):
        # a coarse quadrature cannot meet the 1e-10 norm tolerance
        code, out, _ = run(capsys, "verify", "norm", "--abs-tol", "1e-4", "--rel-tol", "1e-4", "--max-level", "3")
        assert code == 1 and "fail" in out


class TestScans:
    def test_zero_scan_no_zero(self, capsys):
        code, out, _ = run(capsys, "zero-scan", "--t-min", "2", "--t-max", "3", "--step", "0.1")
        assert code == 0
        for line in out.strip().splitlines()[1:]:
            t, abs_zeta, is_zero = line.split(",")
            assert float(abs_zeta) > 0.5 and is_zero == "0"

    @pytest.mark.parametrize("argv", [
        ("--t-min", "14", "--t-max", "14", "--step", "0.01"),
        ("--t-min", "14", "--t-max", "14.3", "--step", "0"),
    ])
    def test_zero_scan_usage(self, capsys, argv):
        assert run(capsys, "zero-scan", *argv)[0] == 2

    @staticmethod
    def max_deviation(out):
        return float(out.strip().splitlines()[-1].split()[-1])

    def test_symmetry_identical(self, capsys):
        code, out, _ = run(capsys, "symmetry-scan", "--s1", "0.5+3i", "--s2", "0.5+3i", "--x=-2:0:1")
        assert code == 0 and self.max_deviation(out) == 0.0

    def test_symmetry_conjugate(self, capsys):
        _, out, _ = run(capsys, "symmetry-scan", "--s1", "0.7+4i", "--s2", "0.7-4i", "--x=-2:0:1")
        for line in out.strip().splitlines()[1:-1]:
            _, re1, im1, re2, im2, _ = map(float, line.split(","))
            assert abs(re1 - re2) <= 1e-10 and abs(im1 + im2) <= 1e-10

    def test_symmetry_distinct(self, capsys):
        _, out, _ = run(capsys, "symmetry-scan", "--s1", "2", "--s2", "3", "--x=-2:0:1")
        rows = out.strip().splitlines()[1:-1]
        assert len(rows) == 3
        assert all(float(r.split(",")[-1]) > 0.0 for r in rows)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rlzeta", "eval", "--mode", "zeta", "--s", "2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "1.64493406684" in proc.stdout
