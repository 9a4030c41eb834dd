import io
import json
import subprocess
import sys

import pytest

from maxsym.classify import MaxActionResult, max_order
from maxsym.cli import canonical_kind, main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_max_text():
    code, out = run("max", "--kind", "E°", "--genus", "19")
    assert code == 0
    row = out.splitlines()[1].split()
    assert row[:3] == ["E°", "19", "60"]


def test_max_json():
    code, out = run("max", "--kind", "EA", "--alpha", "11", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["order"] == 120
    assert doc["surfaces"] == [{"orientable": True, "genus": 0, "boundary": 12}]
    assert set(doc) >= {"kind", "input", "order", "surfaces", "witnesses"}


def test_max_ce_o():
    code, out = run("max", "--kind", "CEo", "--genus", "2", "--json")
    assert json.loads(out)["order"] == 3


def test_range_streams_one_line_each():
    code, out = run("max", "--kind", "EAo", "--range", "2..30", "--json")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 29
    assert [json.loads(x)["input"] for x in lines] == list(range(2, 31))


def test_json_rows_roundtrip_and_match_text():
    _, js = run("max", "--kind", "EA°", "--range", "17..21", "--json")
    _, tx = run("max", "--kind", "EA°", "--range", "17..21")
    for j, t in zip(js.splitlines(), tx.splitlines()[1:]):
        res = MaxActionResult.from_json(json.loads(j))
        assert res == max_order("EAo", res.input)
        assert t.split()[2] == str(res.order)
        for s in res.surfaces:
            assert f"[{s}]" in t


@pytest.mark.parametrize("argv", [
    ("max", "--kind", "E", "--genus", "1"),
    ("max", "--kind", "EA", "--range", "0..5"),
    ("max", "--kind", "XYZ", "--genus", "3"),
    ("max", "--kind", "E", "--alpha", "3"),
    ("max", "--kind", "EA", "--alpha", "3", "--faithful"),
    ("max", "--kind", "E", "--range", "5..2"),
    ("max", "--kind", "E"),
    ("construct", "--model", "cube", "--format", "json", "-o", "x.json"),
    ("construct", "--model", "dipole:4:2", "--format", "json", "-o", "x.json"),
    ("verify", "--suite", "bogus"),
    ("bogus",),
])
def test_usage_errors(argv, capsys, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, _ = run(*argv)
    assert code == 2
    assert capsys.readouterr().err


def test_unbounded_message(capsys):
    code, _ = run("max", "--kind", "CE", "--genus", "1")
    assert code == 2 and "unbounded" in capsys.readouterr().err


def test_faithful():
    code, out = run("max", "--kind", "CEA", "--alpha", "3", "--faithful", "--json")
    assert json.loads(out)["order"] == 4


def test_kind_spellings():
    assert canonical_kind("EA°") == canonical_kind("EAo") == "EAo"
    assert canonical_kind("CEA-faithful") == "CEA-faithful"


def test_verify_facts():
    code, out = run("verify", "--suite", "facts")
    assert code == 0
    assert "facts confirmed  (7/7)" in out and "(1, 1, 1, 1, 2, 1, 4)" in out


def test_verify_tables_range():
    code, out = run("verify", "--suite", "tables", "--range", "2..60")
    assert code == 0 and "0 mismatches" in out


def test_verify_failure_exit_code(monkeypatch):
    from maxsym import verify
    monkeypatch.setitem(verify.E_O_TABLE, 9, 24)     # a deliberately wrong closed form
    code, out = run("verify", "--suite", "tables", "--range", "2..12")
    assert code == 1 and "failures:" in out and "('Eo', 9, 20, 24)" in out


def test_construct_outputs(tmp_path):
    p = tmp_path / "ico.obj"
    code, out = run("construct", "--model", "platonic:I", "--twist", "all", "--format", "obj", "-o", str(p))
    assert code == 0 and "Σ⁻_{14,6}" in out and p.read_text().count("\nf ") == 30
    p = tmp_path / "d.json"
    code, out = run("construct", "--model", "dipole:2:1", "--twist", "none", "--format", "json", "-o", str(p))
    assert code == 0 and "Σ_{0,3}" in out
    p = tmp_path / "g.json"
    code, out = run("construct", "--model", "genus21", "--format", "json", "-o", str(p))
    assert code == 0 and len(json.loads(p.read_text())["vertices"]) == 40


def test_construct_fixture(tmp_path):
    p = tmp_path / "t.json"
    code, out = run("construct", "--model", "triacontahedron", "--twist", "fixture:tri-S9-12",
                    "--format", "json", "-o", str(p))
    assert code == 0 and "Σ_{9,12}" in out
    code, _ = run("construct", "--model", "platonic:I", "--twist", "fixture:tri-S9-12",
                  "--format", "json", "-o", str(p))
    assert code == 2


def test_tolerance_env(monkeypatch, tmp_path):
    monkeypatch.setenv("MAXSYM_TOL", "oops")
    assert run("max", "--kind", "E", "--genus", "3")[0] == 2
    monkeypatch.setenv("MAXSYM_TOL", "1e-7")
    code, out = run("construct", "--model", "platonic:D", "--format", "json", "-o", str(tmp_path / "d.json"))
    assert code == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "maxsym", "max", "--kind", "EA°", "--alpha", "29"],
                          capture_output=True, text=True, check=True)
    assert "Σ_{14,2}" in proc.stdout and "Σ_{5,20}" in proc.stdout
