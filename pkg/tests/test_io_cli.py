import csv
from fractions import Fraction

import pytest

from limwork import ParseError, PointSet, oracle_voronoi, read_points
from limwork.cli import CSV_HEADER, RunReport, VerificationMismatch, main, run, verify
from limwork.edges import DelaunayEdge
from limwork.io import format_edge, format_points, parse_edge, parse_points, write_points

from conftest import RIGHT_TRIANGLE, SQUARE, instance


@pytest.fixture
def triangle_file(tmp_path):
    path = tmp_path / "tri.txt"
    write_points(path, RIGHT_TRIANGLE, "right triangle")
    return path


def test_parse_points_formats():
    pts = parse_points(["# header", "1.5 -2", "", "3/4 0  # trailing", "  -1/3 7  "])
    assert pts == [(Fraction(3, 2), -2), (Fraction(3, 4), 0), (Fraction(-1, 3), 7)]


@pytest.mark.parametrize("line, message", [
    ("1 2 3", "expected 2 coordinates"),
    ("1 x", "bad number 'x'"),
    ("1/0 2", "bad number"),
])
def test_parse_errors_carry_line(line, message):
    with pytest.raises(ParseError) as info:
        parse_points(["0 0", line])
    assert info.value.lineno == 2 and message in str(info.value)


def test_point_file_round_trip(tmp_path):
    ps = instance(20, 3)
    path = tmp_path / "pts.txt"
    write_points(path, list(ps))
    assert list(read_points(path)) == list(ps)
    assert format_points([(Fraction(1, 2), 3)]) == "1/2 3\n"


def test_edge_round_trip():
    ps = instance(15, 1)
    for e in oracle_voronoi(ps).edges:
        assert parse_edge(format_edge(e)) == e
    assert format_edge(DelaunayEdge(2, 5)) == "D 2 5"
    assert parse_edge("D 2 5") == DelaunayEdge(2, 5)
    with pytest.raises(ValueError):
        parse_edge("X 1 2")


def test_voronoi_record_text():
    e = oracle_voronoi(RIGHT_TRIANGLE).edges[0]
    assert format_edge(e) == "V 0 1 *0 -1 2 2"


def test_run_verifies(triangle_file, tmp_path):
    out = tmp_path / "edges.txt"
    report = run(triangle_file, "voronoi-cws", verify_output=True, output_path=out)
    assert report.status == "verified" and report.output_count == 3
    assert out.read_text().count("\n") == 3
    assert "status=verified" in report.summary()


def test_verify_reports_first_difference():
    ps = PointSet(RIGHT_TRIANGLE)
    edges = sorted(oracle_voronoi(ps).edges)
    with pytest.raises(VerificationMismatch) as info:
        verify(ps, "voronoi-cws", edges[1:])
    assert info.value.first == (edges[1], edges[0])


def test_report_validation():
    with pytest.raises(ValueError):
        RunReport("hull", 3, None, 1, 1, 1, 3, status="fine")
    assert RunReport("hull", 3, None, 4, 10, 99, 3).csv_row(7) == ["hull", 3, "", 7, 10, 4, 99]


@pytest.mark.parametrize("algo, extra", [
    ("voronoi-cws", []),
    ("delaunay", []),
    ("voronoi-tradeoff", ["--space", "2"]),
    ("hull", []),
])
def test_cli_run_all(triangle_file, capsys, algo, extra):
    assert main(["run", str(triangle_file), "--algo", algo, "--verify", *extra]) == 0
    out, err = capsys.readouterr()
    assert "status=verified" in err
    assert out.strip()


def test_cli_emst(tmp_path, capsys):
    path = tmp_path / "e.txt"
    write_points(path, [(0, 0), (2, 0), (Fraction(11, 10), 2)])
    assert main(["run", str(path), "--algo", "emst", "--verify"]) == 0
    assert capsys.readouterr().out.splitlines() == ["D 0 1", "D 1 2"]


def test_cli_exit_codes(tmp_path, capsys):
    square = tmp_path / "sq.txt"
    write_points(square, SQUARE)
    assert main(["run", str(square), "--algo", "voronoi-cws"]) == 3
    bad = tmp_path / "bad.txt"
    bad.write_text("0 0\n1 x\n")
    assert main(["run", str(bad), "--algo", "hull"]) == 2
    assert "line 2" in capsys.readouterr().err
    assert main(["run", str(tmp_path / "missing.txt"), "--algo", "hull"]) == 2
    tri = tmp_path / "tri.txt"
    write_points(tri, RIGHT_TRIANGLE)
    assert main(["run", str(tri), "--algo", "voronoi-tradeoff"]) == 2


def test_cli_csv(triangle_file, tmp_path):
    out_csv = tmp_path / "r.csv"
    assert main(["run", str(triangle_file), "--algo", "voronoi-tradeoff", "--space", "3",
                 "--out", str(tmp_path / "e.txt"), "--csv", str(out_csv)]) == 0
    rows = list(csv.reader(out_csv.open()))
    assert rows[0] == list(CSV_HEADER)
    assert rows[1][:3] == ["voronoi-tradeoff", "3", "3"]


def test_cli_bench(tmp_path, capsys):
    assert main(["bench", "--algo", "voronoi-tradeoff", "--n", "12,20", "--s-list", "1,4",
                 "--seed", "5"]) == 0
    rows = list(csv.reader(capsys.readouterr().out.splitlines()))
    assert rows[0] == list(CSV_HEADER) and len(rows) == 5
    assert {r[2] for r in rows[1:]} == {"1", "4"}
    path = tmp_path / "b.csv"
    assert main(["bench", "--algo", "hull", "--n", "30", "--reps", "2", "--csv", str(path)]) == 0
    rows = list(csv.reader(path.open()))
    assert len(rows) == 3 and rows[1][2] == "" and rows[1][3] == "0"
    assert main(["bench", "--algo", "hull"]) == 2


def test_cli_generate(tmp_path, capsys):
    path = tmp_path / "g.txt"
    assert main(["generate", "--n", "25", "--seed", "4", "--out", str(path)]) == 0
    assert list(read_points(path)) == list(instance(25, 4))
    assert main(["generate", "--n", "5", "--seed", "1", "--guard", "lengths"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("#") and len(lines) == 6
    with pytest.raises(SystemExit):
        main(["generate", "--n", "5", "--guard", "sideways"])
