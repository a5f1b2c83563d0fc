"""
Unit tests for the lghap command line: expand, eval, grid, verify, listings,
bench and exit codes.
"""

import io
import json

import pytest
from rich.console import Console

from lghap import cli
from lghap.appell import make_family
from lghap.schemas import LghParams

EQ_3_8 = "y^4 - 2*y^3 + y^2 + 24*x*y - 12*x - 1/30"
P35_ARGS = ["--m", "3", "--r", "5", "--n", "4"]


@pytest.fixture
def out(monkeypatch):
    buf = io.StringIO()
    monkeypatch.setattr(cli, "console", Console(file=buf, width=200, color_system=None))
    return buf


@pytest.fixture
def err(monkeypatch):
    buf = io.StringIO()
    monkeypatch.setattr(cli, "err_console", Console(file=buf, width=200, color_system=None))
    return buf


# ──────────────────────────────────────────────────────────────
# Parsing helpers
# ──────────────────────────────────────────────────────────────

class TestParsing:
    def test_family_list_keeps_parameters_together(self):
        assert cli.split_family_list("bernoulli,apostol-euler:alpha=1,lambda=2,euler") == [
            "bernoulli", "apostol-euler:alpha=1,lambda=2", "euler",
        ]

    def test_family_list_ignores_blanks(self):
        assert cli.split_family_list(" bernoulli , ,euler") == ["bernoulli", "euler"]


# ──────────────────────────────────────────────────────────────
# expand / eval / grid
# ──────────────────────────────────────────────────────────────

class TestExpand:
    @pytest.mark.parametrize("family, expected", [
        ("bernoulli", EQ_3_8),
        ("genocchi", "4*y^3 - 6*y^2 + 24*x + 1"),
        ("trunc-exp", "1/24*y^4 + 1/6*y^3 + 1/2*y^2 + 24*x*y + y + 24*x + 1"),
    ])
    def test_golden_text(self, out, family, expected):
        assert cli.run(["expand", "--family", family, *P35_ARGS]) == 0
        assert out.getvalue().strip() == expected

    @pytest.mark.parametrize("method", ["binomial", "gf", "det", "op"])
    def test_methods_agree(self, out, method):
        assert cli.run(["expand", "--family", "bernoulli", *P35_ARGS, "--method", method]) == 0
        assert out.getvalue().strip() == EQ_3_8

    def test_json(self, out):
        assert cli.run(["expand", "--family", "bernoulli", *P35_ARGS, "--format", "json"]) == 0
        record = json.loads(out.getvalue())
        assert (record["family"], record["m"], record["r"], record["n"]) == ("bernoulli", 3, 5, 4)
        assert record["terms"][0] == {"x": 0, "y": 4, "z": 0, "coeff": "1"}
        assert record["terms"][-1] == {"x": 0, "y": 0, "z": 0, "coeff": "-1/30"}
        assert len(record["terms"]) == 6

    def test_paper_literal_gf_is_usage_error(self, out, err):
        assert cli.run(["expand", "--family", "trunc-exp", *P35_ARGS, "--method", "gf"]) == 2
        assert "paper-literal" in err.getvalue()

    def test_unknown_family(self, out, err):
        assert cli.run(["expand", "--family", "chebyshev", *P35_ARGS]) == 2
        assert "Unknown family" in err.getvalue()

    def test_bad_index(self, out, err):
        assert cli.run(["expand", "--family", "euler", "--m", "0", "--r", "5", "--n", "4"]) == 2
        assert cli.run(["expand", "--family", "euler", "--m", "3", "--r", "5", "--n", "-1"]) == 2

    def test_missing_arguments(self, out):
        assert cli.run(["expand", "--family", "euler"]) == 2


class TestEval:
    def test_family_point(self, out):
        assert cli.run(["eval", "--family", "bernoulli", *P35_ARGS, "--at", "x=1,y=1,z=0"]) == 0
        assert out.getvalue().strip() == "359/30"

    def test_decimal_rendering(self, out):
        assert cli.run(["eval", "--poly", EQ_3_8, "--at", "x=1,y=1,z=0", "--digits", "3"]) == 0
        assert out.getvalue().split() == ["359/30", "11.967"]

    def test_missing_variables_default_to_zero(self, out):
        assert cli.run(["eval", "--poly", EQ_3_8, "--at", "y=0"]) == 0
        assert out.getvalue().strip() == "-1/30"

    def test_needs_a_polynomial(self, out, err):
        assert cli.run(["eval", "--at", "x=1"]) == 2
        assert cli.run(["eval", "--family", "euler", "--at", "x=1"]) == 2

    def test_bad_point(self, out, err):
        assert cli.run(["eval", "--poly", "y", "--at", "w=1"]) == 2
        assert cli.run(["eval", "--poly", "y", "--at", "y=0.5"]) == 2


class TestGrid:
    def test_golden_grid(self, out):
        code = cli.run([
            "grid", "--family", "bernoulli", *P35_ARGS,
            "--fix", "z=0", "--sweep", "x=0:1:2", "--sweep", "y=0:1:2",
        ])
        assert code == 0
        assert out.getvalue().strip().splitlines() == [
            "x,y,value",
            "0.0,0.0,-0.033333333333",
            "0.0,1.0,-0.033333333333",
            "1.0,0.0,-12.033333333333",
            "1.0,1.0,11.966666666667",
        ]

    def test_variable_absent_from_polynomial(self, out):
        code = cli.run([
            "grid", "--family", "genocchi", *P35_ARGS,
            "--fix", "z=1", "--sweep", "x=0:1:2", "--sweep", "y=0:1:2",
        ])
        assert code == 0
        assert out.getvalue().splitlines()[1] == "0.0,0.0,1.0"

    def test_grid_matches_exact_evaluation(self, out):
        code = cli.run([
            "grid", "--family", "bernoulli", *P35_ARGS, "--digits", "6",
            "--fix", "z=2", "--sweep", "x=-1:1:3", "--sweep", "y=-1:1:5",
        ])
        assert code == 0
        rows = out.getvalue().strip().splitlines()
        assert len(rows) == 1 + 3 * 5
        assert rows[1] == "-1.0,-1.0,39.966667"

    def test_output_file(self, out, tmp_path):
        target = tmp_path / "grid.csv"
        code = cli.run([
            "grid", "--family", "euler", *P35_ARGS,
            "--sweep", "x=0:1:2", "--sweep", "y=0:1:2", "--output", str(target),
        ])
        assert code == 0
        assert out.getvalue() == ""
        assert target.read_text(encoding="utf-8").splitlines()[0] == "x,y,value"

    @pytest.mark.parametrize("sweeps", [
        ["--sweep", "x=0:1:2"],
        ["--sweep", "x=0:1:2", "--sweep", "x=0:1:3"],
        ["--sweep", "x=0:1:1", "--sweep", "y=0:1:2"],
        ["--sweep", "x=1:1:2", "--sweep", "y=0:1:2"],
        ["--sweep", "x=0:1", "--sweep", "y=0:1:2"],
        ["--sweep", "w=0:1:2", "--sweep", "y=0:1:2"],
        ["--fix", "y=0", "--sweep", "x=0:1:2", "--sweep", "y=0:1:2"],
    ])
    def test_invalid_grids(self, out, err, sweeps):
        assert cli.run(["grid", "--family", "euler", *P35_ARGS, *sweeps]) == 2


# ──────────────────────────────────────────────────────────────
# verify / families / cases / bench
# ──────────────────────────────────────────────────────────────

class TestVerify:
    def test_all_equivalences_hold(self, out):
        code = cli.run([
            "verify", "--families", "bernoulli,euler", "--m", "3", "--r", "5", "--n-max", "6",
            "--methods", "series,gf,det,op,ode", "--workers", "1",
        ])
        assert code == 0
        assert "All selected equivalences hold." in out.getvalue()

    def test_skips_do_not_fail(self, out):
        code = cli.run([
            "verify", "--families", "genocchi,trunc-exp", "--m", "2", "--r", "2", "--n-max", "3",
            "--cases", "T1-XIII,T2-IV,T1-VI", "--workers", "1",
        ])
        assert code == 0
        text = out.getvalue()
        assert "case T1-VI" in text
        assert "FAILED" not in text

    def test_unknown_method(self, out, err):
        code = cli.run([
            "verify", "--families", "euler", "--m", "2", "--r", "2", "--n-max", "1", "--methods", "magic",
        ])
        assert code == 2

    def test_failure_exit_code(self, out, monkeypatch):
        from lghap import verification

        monkeypatch.setitem(verification._CHECKS, verification.Method.GF, lambda f, p, n, ref: ["forced"])
        code = cli.run([
            "verify", "--families", "euler", "--m", "2", "--r", "2", "--n-max", "1",
            "--methods", "series,gf", "--workers", "1",
        ])
        assert code == 1
        assert "FAILED" in out.getvalue()


class TestListings:
    def test_families(self, out):
        assert cli.run(["families"]) == 0
        text = out.getvalue()
        for name in ("bernoulli", "apostol-euler", "modified-laguerre", "paper-literal"):
            assert name in text

    def test_families_note_euler_convention(self, out):
        assert cli.run(["families"]) == 0
        assert "E_4(y) = y^4 - 2*y^3 + y" in out.getvalue()

    def test_cases(self, out):
        assert cli.run(["cases"]) == 0
        text = out.getvalue()
        assert "T1-XIII" in text
        assert "T2-XV" in text and "unsupported" in text


class TestBench:
    def test_command(self, out):
        assert cli.run(["bench", "--family", "bernoulli", "--m", "2", "--r", "2", "--n-max", "3"]) == 0
        assert "Timings for bernoulli" in out.getvalue()

    def test_rows(self):
        rows = cli.bench_rows(make_family("euler"), LghParams(m=2, r=2), 3)
        assert [row.n for row in rows] == [0, 1, 2, 3]
        assert all(row.det_ms is not None and row.naive_ms is not None for row in rows)

    def test_degenerate_family_times_what_applies(self):
        rows = cli.bench_rows(make_family("genocchi"), LghParams(m=2, r=2), 2)
        assert all(row.gf_ms is not None and row.det_ms is None for row in rows)
