import csv
import json
from math import pi, sqrt

import pytest

from acleggett.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestLeggettScan:
    def test_scan_csv(self, capsys, tmp_path):
        out = tmp_path / "scan.csv"
        code, _, _ = run(
            capsys, "leggett-scan", "--phi-min", "0", "--phi-max", "3.14159",
            "--steps", "1000", "--output", str(out),
        )
        assert code == 0
        rows = list(csv.DictReader(out.open()))
        assert len(rows) == 1000
        near_max = min(rows, key=lambda r: abs(float(r["phi"]) - 0.6435011088))
        assert float(near_max["violation"]) == pytest.approx(0.1081851068, abs=1e-5)
        assert near_max["violated_flag"] == "true"
        at_two = min(rows, key=lambda r: abs(float(r["phi"]) - 2.0))
        assert at_two["violated_flag"] == "false"

    def test_zero_steps_usage_error(self, capsys):
        code, _, err = run(capsys, "leggett-scan", "--steps", "0")
        assert code == 2
        assert "steps" in err

    def test_deterministic_output(self, capsys, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        run(capsys, "leggett-scan", "--steps", "200", "--output", str(a))
        run(capsys, "leggett-scan", "--steps", "200", "--output", str(b))
        assert a.read_bytes() == b.read_bytes()

    def test_plot_written(self, capsys, tmp_path):
        fig = tmp_path / "scan.png"
        code, _, _ = run(
            capsys, "leggett-scan", "--steps", "100",
            "--output", str(tmp_path / "s.csv"), "--plot", str(fig),
        )
        assert code == 0
        assert fig.stat().st_size > 0


class TestChsh:
    def test_default_run(self, capsys):
        code, out, _ = run(capsys, "chsh")
        assert code == 0
        record = json.loads(out)
        # output carries 12 significant digits
        assert record["value"] == pytest.approx(2 * sqrt(2), abs=1e-11)
        assert record["bound"] == 2
        assert record["violated"] is True

    def test_custom_settings(self, capsys, tmp_path):
        f = tmp_path / "custom.json"
        same = [pi / 2, 0.0]
        f.write_text(json.dumps({"a": same, "a'": same, "b": same, "b'": same}))
        code, out, _ = run(capsys, "chsh", "--settings", str(f))
        assert code == 0
        record = json.loads(out)
        assert record["value"] == pytest.approx(2, abs=1e-12)
        assert record["violated"] is False

    def test_malformed_settings(self, capsys, tmp_path):
        f = tmp_path / "bad.json"
        f.write_text('{"a": [0, 0]}')
        code, _, err = run(capsys, "chsh", "--settings", str(f))
        assert code == 2
        assert err


class TestCorrelate:
    def test_z_settings(self, capsys):
        code, out, _ = run(
            capsys, "correlate", "--theta-a", "0", "--phi-a", "0",
            "--theta-b", "0", "--phi-b", "0",
        )
        assert code == 0
        record = json.loads(out)
        assert record["analytic"] == pytest.approx(-1, abs=1e-12)
        assert record["operator"] == pytest.approx(-1, abs=1e-12)

    def test_operator_matches_analytic(self, capsys):
        code, out, _ = run(
            capsys, "correlate", "--theta-a", "1.5707963267948966", "--phi-a", "0",
            "--theta-b", "1.5707963267948966", "--phi-b", "0.7853981633974483",
        )
        record = json.loads(out)
        assert record["analytic"] == pytest.approx(-1 / sqrt(2), abs=1e-10)
        assert record["operator"] == pytest.approx(record["analytic"], abs=1e-10)
        assert "pipeline" in record and "degenerate" in record


class TestGeometry:
    @pytest.fixture
    def layout_file(self, tmp_path):
        doc = {
            "charge": {"position": [0.0, 0.0], "k": 1.0},
            "points": {"O12": [1.0, 0.0], "O34": [4.0, 0.0], "A": [2.0, 0.0], "B": [3.0, 0.0]},
            "paths": {
                "l1": [[1.0, 0.0], [2.0, 0.0]],
                "l2": [[1.0, 0.0], [3.0, 0.0]],
                "l3": [[4.0, 0.0], [3.0, 0.0]],
                "l4": [[4.0, 0.0], [2.0, 0.0]],
            },
        }
        f = tmp_path / "layout.json"
        f.write_text(json.dumps(doc))
        return f

    def test_radial_layout(self, capsys, tmp_path, layout_file):
        out = tmp_path / "phases.csv"
        code, stdout, _ = run(
            capsys, "geometry", "--layout", str(layout_file), "--output", str(out)
        )
        assert code == 0
        rows = list(csv.DictReader(out.open()))
        for r in rows:
            if r["path_id"].startswith("l"):
                assert float(r["phase_numeric"]) == pytest.approx(0, abs=1e-8)
                assert float(r["abs_diff"]) < 1e-8
        summary = json.loads(stdout)
        assert summary["loop_winding"] == 0
        assert summary["gamma"] == pytest.approx(0, abs=1e-8)

    def test_exclusion_violation_exit(self, capsys, tmp_path):
        doc = {
            "charge": {"position": [1.5, 0.0], "k": 1.0},
            "points": {"O12": [1.0, 0.0], "O34": [4.0, 0.0], "A": [2.0, 0.0], "B": [3.0, 0.0]},
            "paths": {
                "l1": [[1.0, 0.0], [2.0, 0.0]],
                "l2": [[1.0, 0.0], [3.0, 0.0]],
                "l3": [[4.0, 0.0], [3.0, 0.0]],
                "l4": [[4.0, 0.0], [2.0, 0.0]],
            },
        }
        f = tmp_path / "bad.json"
        f.write_text(json.dumps(doc))
        code, _, err = run(capsys, "geometry", "--layout", str(f))
        assert code == 2
        assert "exclusion" in err.lower() or "charge" in err.lower()

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "geometry", "--layout", str(tmp_path / "nope.json"))
        assert code == 2


class TestConventionReport:
    def test_report_runs(self, capsys, tmp_path):
        out = tmp_path / "report.csv"
        code, stdout, _ = run(
            capsys, "convention-report", "--n-phases", "3", "--n-thetas", "3",
            "--output", str(out),
        )
        assert code == 0
        rows = list(csv.DictReader(out.open()))
        assert len(rows) == 9
        summary = json.loads(stdout)
        assert summary["n_rows"] == 9
        assert "max_abs_diff" in summary

    def test_deterministic_given_seed(self, capsys, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        run(capsys, "convention-report", "--n-phases", "2", "--n-thetas", "2",
            "--seed", "7", "--output", str(a))
        run(capsys, "convention-report", "--n-phases", "2", "--n-thetas", "2",
            "--seed", "7", "--output", str(b))
        assert a.read_bytes() == b.read_bytes()


class TestVerify:
    def test_single_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "statevec")
        assert code == 0
        assert "PASS" in out
        assert "geometry" not in out

    def test_unknown_suite(self, capsys):
        code, _, err = run(capsys, "verify", "--suite", "nope")
        assert code == 2

    def test_full_run_includes_convention_summary(self, capsys):
        code, out, _ = run(capsys, "verify")
        assert code == 0
        assert "convention report" in out
