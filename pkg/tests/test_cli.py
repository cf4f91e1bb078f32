"""CLI adapters: wiring, exit codes, deterministic output."""

import json

import pytest

from equiarea.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_square(tmp_path):
    path = tmp_path / "sq.txt"
    path.write_text("0 0\n1 0\n0 1\n1 1\n")
    return str(path)


class TestGenAndCount:
    def test_gen_to_count_pipeline(self, capsys, tmp_path):
        out_file = str(tmp_path / "grid.txt")
        code, _, _ = run(capsys, "gen", "--kind", "grid", "--rows", "2", "--cols", "2", "--out", out_file)
        assert code == 0
        code, out, _ = run(capsys, "count", "--input", out_file, "--area", "1/2", "--method", "brute")
        assert code == 0 and out.strip() == "4"
        code, out, _ = run(capsys, "count", "--input", out_file, "--area", "1/2", "--method", "pairline")
        assert code == 0 and out.strip() == "4"

    def test_methods_agree_on_lattice(self, capsys, tmp_path):
        out_file = str(tmp_path / "lat.txt")
        run(capsys, "gen", "--kind", "lattice", "--n", "40", "--out", out_file)
        _, brute, _ = run(capsys, "count", "--input", out_file, "--area", "1/2", "--method", "brute")
        _, pairline, _ = run(capsys, "count", "--input", out_file, "--area", "1/2", "--method", "pairline")
        assert brute == pairline

    def test_gen_random_deterministic(self, capsys):
        _, a, _ = run(capsys, "gen", "--kind", "random", "--n", "10", "--seed", "3")
        _, b, _ = run(capsys, "gen", "--kind", "random", "--n", "10", "--seed", "3")
        assert a == b


class TestStatsAndMatching:
    def test_stats_csv(self, capsys, tmp_path):
        code, out, _ = run(capsys, "stats", "--input", write_square(tmp_path), "--k", "2")
        lines = out.strip().split("\n")
        assert code == 0
        assert lines[0] == "n,k,m,N,ratio_m,ratio_N"
        assert lines[1].startswith("4,2,6,12,")

    def test_matching_handles_vertical_lines(self, capsys, tmp_path):
        # The square spans two vertical lines; the adapter shears internally.
        code, out, _ = run(
            capsys, "matching", "--input", write_square(tmp_path), "--k", "2", "--require-q-in-s"
        )
        lines = out.strip().split("\n")
        assert code == 0
        assert lines[0] == "n,k,A,N,M"
        assert lines[1] == "4,2,1,12,0"

    def test_tally_csv(self, capsys, tmp_path):
        code, out, _ = run(capsys, "tally", "--input", write_square(tmp_path), "--k", "2", "--area", "1/2")
        lines = out.strip().split("\n")
        assert code == 0
        assert lines[0] == "n,k,area,total,T0,T1,T2,T3"
        fields = lines[1].split(",")
        assert fields[3] == "4"

    def test_rich_lines(self, capsys, tmp_path):
        code, out, _ = run(capsys, "rich-lines", "--input", write_square(tmp_path), "--k", "2")
        lines = out.strip().split("\n")
        assert code == 0
        assert lines[0] == "A,B,C,members"
        assert len(lines) == 7  # 6 spanned lines on the square


class TestCurveRoundTrip:
    def test_curve_then_reconstruct(self, capsys, tmp_path):
        curve_file = str(tmp_path / "curve.json")
        code, _, _ = run(capsys, "curve", "--pair1", "0,0,0", "--pair2", "1,2,1", "--out", curve_file)
        assert code == 0
        doc = json.loads(open(curve_file).read())
        assert doc["case"] == "general"
        assert doc["bundle"]["C"] == "-1"
        assert [0, 1, 0] in doc["asymptotes"]
        code, out, _ = run(capsys, "reconstruct", "--in", curve_file)
        assert code == 0
        assert out == "0 0 0\n1 2 1\n"

    def test_degenerate_curve_document(self, capsys, tmp_path):
        curve_file = str(tmp_path / "empty.json")
        code, _, _ = run(capsys, "curve", "--pair1", "0,0,0", "--pair2", "0,0,1", "--out", curve_file)
        assert code == 0
        doc = json.loads(open(curve_file).read())
        assert doc["case"] == "empty"
        assert doc["coefficients"] is None
        code, _, err = run(capsys, "reconstruct", "--in", curve_file)
        assert code == 2 and "no curve" in err

    def test_stdout_default(self, capsys):
        code, out, _ = run(capsys, "curve", "--pair1", "0,0,0", "--pair2", "1,0,1")
        assert code == 0
        assert json.loads(out)["case"] == "point_on_line_1"


class TestScans:
    def test_bezout_small(self, capsys):
        code, out, _ = run(capsys, "bezout", "--trials", "5", "--seed", "0")
        lines = out.strip().split("\n")
        assert code == 0
        assert lines[0] == "trials,max_upper_bound,violations"
        trials, max_bound, violations = lines[1].split(",")
        assert trials == "5" and int(max_bound) <= 9 and violations == "0"

    def test_k310_small(self, capsys):
        code, out, _ = run(capsys, "k310-scan", "--trials", "5", "--seed", "0")
        lines = out.strip().split("\n")
        assert code == 0
        trials, max_pts, violations = lines[1].split(",")
        assert trials == "5" and int(max_pts) <= 9 and violations == "0"

    def test_threads_do_not_change_results(self, capsys):
        _, serial, _ = run(capsys, "bezout", "--trials", "6", "--seed", "1")
        _, parallel, _ = run(capsys, "bezout", "--trials", "6", "--seed", "1", "--threads", "2")
        assert serial == parallel


class TestScaling:
    def test_csv_shape(self, capsys):
        code, out, _ = run(capsys, "scaling", "--kind", "lattice", "--sizes", "16,32", "--k", "2")
        lines = out.strip().split("\n")
        assert code == 0
        assert lines[0].startswith("generator,n,k,area,count")
        assert len(lines) == 3
        assert lines[1].split(",")[3] == "1/2"

    def test_deterministic_modulo_seconds(self, capsys):
        def strip_seconds(text):
            rows = []
            for line in text.strip().split("\n"):
                cells = line.split(",")
                rows.append(",".join(cells[:12] + cells[13:]))
            return rows

        _, a, _ = run(capsys, "scaling", "--kind", "random", "--sizes", "10,20", "--seed", "2")
        _, b, _ = run(capsys, "scaling", "--kind", "random", "--sizes", "10,20", "--seed", "2")
        assert strip_seconds(a) == strip_seconds(b)


class TestErrorPaths:
    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "count", "--input", "/nonexistent/pts.txt", "--area", "1")
        assert code == 2 and err

    def test_parse_error_cites_line(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("0 0\n1 1\nbad line here\n")
        code, _, err = run(capsys, "count", "--input", str(path), "--area", "1")
        assert code == 2
        assert ":3:" in err

    def test_decimal_area_rejected(self, capsys, tmp_path):
        code, _, err = run(capsys, "count", "--input", write_square(tmp_path), "--area", "0.5")
        assert code == 2 and "rational" in err

    def test_unknown_flag_exits_two(self, tmp_path):
        with pytest.raises(SystemExit) as exc:
            main(["count", "--nope"])
        assert exc.value.code == 2

    def test_byte_identical_reruns(self, capsys, tmp_path):
        square = write_square(tmp_path)
        _, a, _ = run(capsys, "stats", "--input", square, "--k", "2")
        _, b, _ = run(capsys, "stats", "--input", square, "--k", "2")
        assert a == b
