import json
import subprocess
import sys

import pytest

from polydepth import instances
from polydepth.cli import main
from polydepth.io import (
    AnalysisOptions,
    PolytopeFileError,
    analyze,
    emit_report,
    format_polytope,
    parse_polytope_file,
    parse_report,
)
from polydepth.polytope import bipyramid, cube, product_with_cube

NON_NORMAL_FILE = """# non-normal very ample
4 9
0 1 0 0 1 0 1 1 -1
0 0 1 0 0 1 1 1 -1
0 0 0 1 1 1 4 5 -3
1 1 1 1 1 1 1 1 -2
"""


def test_parse_segment():
    P = parse_polytope_file(b"1 2\n-1 1\n")
    assert P.vertices == ((-1,), (1,))


def test_parse_nonnormal(nonnormal_polytope):
    P = parse_polytope_file(NON_NORMAL_FILE.encode())
    assert P == nonnormal_polytope and len(P.vertices) == 9


def test_parse_transposed():
    rows = "2 3\n0 0\n1 0\n0 1\n"
    P = parse_polytope_file(rows)
    assert sorted(P.vertices) == [(0, 0), (0, 1), (1, 0)]
    with pytest.raises(PolytopeFileError):
        parse_polytope_file(rows, transpose=False)


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("4 6\n1 2 3 4 5\n1 2 3 4 5\n1 2 3 4 5\n1 2 3 4 5\n", 2, 10),
        ("1 2\n-1 x\n", 2, 4),
        ("1\n0\n", 1, 1),
        ("", 1, 1),
        ("# c\n2 2\n0 1\n", 4, 1),
    ],
)
def test_parse_errors(text, line, column):
    with pytest.raises(PolytopeFileError) as err:
        parse_polytope_file(text)
    assert (err.value.line, err.value.column) == (line, column)


def test_format_roundtrip(nonnormal_polytope):
    for P in [nonnormal_polytope, bipyramid(nonnormal_polytope), product_with_cube(nonnormal_polytope, 1)]:
        text = format_polytope(P)
        assert "\r" not in text and "  " not in text
        assert parse_polytope_file(text) == P


def test_nonnormal_report(nonnormal_polytope):
    r = analyze(nonnormal_polytope)
    assert r.reflexive is True and r.normal is False
    assert r.witness == {"point": [1, 1, 3, 2], "dilation": 2}
    assert r.very_ample is True and r.spans_lattice is True
    assert r.depth == 1 and r.dual_normal is True


def test_p2_report(example_polytopes):
    r = analyze(example_polytopes["P2"])
    assert (r.reflexive, r.normal, r.depth, r.dual_normal) == (True, False, 3, True)


def test_cube_report_structured():
    r = analyze(cube(4))
    doc = json.loads(emit_report(r, "structured"))
    assert list(doc) == [
        "identity", "reflexive", "normal", "witness", "very_ample",
        "spans_lattice", "depth", "depth_method", "dual_normal", "timings",
    ]
    assert doc["depth"] == 5 and doc["depth_method"] == "hochster-normal"
    assert parse_report(emit_report(r, "structured")) == r


def test_report_determinism(example_polytopes):
    a = analyze(example_polytopes["P3"])
    b = analyze(parse_polytope_file(format_polytope(example_polytopes["P3"])))
    assert a.without_timings() == b.without_timings()


def test_budget_exceeded_report(example_polytopes):
    r = analyze(example_polytopes["P1"], AnalysisOptions("exact", budget_seconds=0.0))
    assert r.depth == "budget exceeded" and r.dual_normal is True
    assert json.loads(emit_report(r, "structured"))["depth"] == "budget exceeded"


def test_non_reflexive_skips_dual():
    r = analyze(instances.segment(0, 2))
    assert r.reflexive is False and r.dual_normal == "skipped"


def _run(args, tmp_path, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "polydepth", *args], cwd=tmp_path, input=stdin,
        capture_output=True, text=True, timeout=600,
    )


def test_cli_construct_roundtrip(tmp_path):
    (tmp_path / "seg.txt").write_text("1 2\n-1 1\n")
    out = _run(["construct", "bipyr", "seg.txt"], tmp_path)
    assert out.returncode == 0 and out.stdout == "2 4\n-1 0 0 1\n0 -1 1 0\n"
    pyr = _run(["construct", "pyr", "-"], tmp_path, out.stdout)
    assert parse_polytope_file(pyr.stdout).dim == 3


def test_cli_exit_codes(tmp_path, capsys):
    (tmp_path / "bad.txt").write_text("4 6\n1 2 3 4 5\n")
    assert main(["points", str(tmp_path / "bad.txt")]) == 2
    assert "line 2" in capsys.readouterr().err
    assert main(["points", str(tmp_path / "missing.txt")]) == 2


def test_cli_budget_env_and_flag(tmp_path, monkeypatch, capsys, example_polytopes):
    path = tmp_path / "p1.txt"
    path.write_text(format_polytope(example_polytopes["P1"]))
    monkeypatch.setenv("POLYDEPTH_BUDGET_SECONDS", "0")
    assert main(["depth", str(path), "--strategy", "exact"]) == 0
    assert capsys.readouterr().out.strip() == "budget exceeded"
    assert main(["depth", str(path), "--strategy", "exact", "--budget-seconds", "600"]) == 0
    assert capsys.readouterr().out.strip() == "2 (resolution)"


def test_cli_batch(tmp_path):
    d = tmp_path / "in"
    d.mkdir()
    (d / "seg.txt").write_text("1 2\n-1 1\n")
    (d / "c2.txt").write_text(format_polytope(cube(2)))
    (d / "broken.txt").write_text("2 2\n")
    out = _run(["analyze", "in", "--json", "--output-dir", "out"], tmp_path)
    assert out.returncode == 2
    reports = sorted(p.name for p in (tmp_path / "out").iterdir())
    assert reports == ["c2.report.json", "seg.report.json"]
    doc = json.loads((tmp_path / "out" / "c2.report.json").read_text())
    assert doc["depth"] == 3


def test_cli_other_commands(tmp_path, capsys):
    path = tmp_path / "nonnormal.txt"
    path.write_text(NON_NORMAL_FILE)
    assert main(["points", str(path), "--json"]) == 0
    assert len(json.loads(capsys.readouterr().out)) == 12
    assert main(["hilbert", str(path), "--json"]) == 0
    assert [1, 1, 3, 2, 2] in json.loads(capsys.readouterr().out)
    assert main(["dual", str(path)]) == 0
    assert parse_polytope_file(capsys.readouterr().out).ambient_dim == 4
    assert main(["analyze", str(path)]) == 0
    assert "germany-shortcut" in capsys.readouterr().out
