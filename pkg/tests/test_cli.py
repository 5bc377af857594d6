import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from sgpencil import configlib
from sgpencil.cli import main


def run(capsys, monkeypatch, argv, stdin=""):
    monkeypatch.setattr(sys, "stdin", __import__("io").StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def report(text):
    return dict(line.split("=", 1) for line in text.splitlines())


@pytest.fixture
def fermat3(tmp_path):
    path = tmp_path / "f3.txt"
    configlib.dump(configlib.fermat_config(3), path)
    return str(path)


def test_gen_hesse_then_sg_check(capsys, monkeypatch):
    code, text, _ = run(capsys, monkeypatch, ["gen", "--hesse"])
    assert code == 0 and text.startswith("field 12\n")
    code, out, _ = run(capsys, monkeypatch, ["sg-check"], stdin=text)
    r = report(out)
    assert code == 0 and r["sg"] == "true" and r["points"] == "9"


def test_pencil_report(capsys, monkeypatch, fermat3):
    code, out, _ = run(capsys, monkeypatch, ["pencil", fermat3, "--apex", "0;0;1"])
    r = report(out)
    assert code == 0
    assert r["m"] == "5" and r["counts"] == "3,3,1,1,1"
    assert r["consistent"] == "true"


def test_pencil_search(capsys, monkeypatch, fermat3):
    code, out, _ = run(capsys, monkeypatch, ["pencil", fermat3, "--search", "5"])
    r = report(out)
    assert code == 0 and int(r["found"]) >= 3


def test_graph_report_and_svg(capsys, monkeypatch, fermat3, tmp_path):
    svg = tmp_path / "g.svg"
    code, out, _ = run(capsys, monkeypatch, ["graph", fermat3, "--apex", "0;0;1", "--svg", str(svg)])
    r = report(out)
    assert code == 0
    assert r["edges"] == "3" and r["forest"] == "true" and r["planar"] == "true"
    root = ET.parse(svg).getroot()
    ns = {"s": "http://www.w3.org/2000/svg"}
    assert len(root.findall(".//s:circle", ns)) == 4
    assert len(root.findall(".//s:line", ns)) == 3


def test_lines_and_ordinary(capsys, monkeypatch, fermat3):
    code, out, _ = run(capsys, monkeypatch, ["lines", fermat3])
    assert report(out)["spanned"] == "12"
    code, out, _ = run(capsys, monkeypatch, ["ordinary", fermat3])
    assert report(out)["ordinary"] == "0"


def test_find_ordinary(capsys, monkeypatch, tmp_path):
    path = tmp_path / "c.txt"
    path.write_text("field 4\npoint 0 ; 0 ; 1\npoint 1 ; 0 ; 1\npoint 0 ; 1 ; 1\npoint 1 ; -1 ; 0\n")
    code, out, _ = run(capsys, monkeypatch, ["find-ordinary", str(path), "--apex", "1;0;0"])
    r = report(out)
    assert code == 0 and r["result"] == "witness"
    assert r["line"] == "1 ; 1 ; 0" and r["members"] == "0,3"


def test_find_ordinary_bound_not_exceeded(capsys, monkeypatch, fermat3):
    code, out, _ = run(capsys, monkeypatch, ["find-ordinary", fermat3, "--apex", "0;0;1"])
    r = report(out)
    assert r["result"] == "bound-not-exceeded" and r["edges"] == "3"


def test_realize(capsys, monkeypatch, tmp_path):
    path = tmp_path / "p3.txt"
    path.write_text("graph v=3\nedge 1 2\nedge 2 3\n")
    code, out, _ = run(capsys, monkeypatch, ["realize", str(path), "--seed", "0"])
    r = report(out)
    assert code == 0 and r["status"] == "realized"
    code, out, _ = run(capsys, monkeypatch, ["realize", "-"], stdin="graph v=3\nedge 1 2\nedge 2 3\nedge 1 3\n")
    r = report(out)
    assert r["status"] == "provably_unrealizable" and "obstruction_kind" in r


def test_green_check(capsys, monkeypatch, fermat3):
    code, out, _ = run(capsys, monkeypatch, ["green-check", fermat3, "--apex", "0;0;1",
                                             "--polygon=0,-1-z^3,1", "--resolution", "200"])
    r = report(out)
    assert code == 0 and "integral_approx" in r and "h_approx" in r


def test_reports_are_deterministic(capsys, monkeypatch, fermat3):
    outs = [run(capsys, monkeypatch, ["graph", fermat3, "--apex", "0;0;1"])[1] for _ in range(2)]
    assert outs[0] == outs[1]
    outs = [run(capsys, monkeypatch, ["gen", "--random", "4", "3,1,1,2", "5"])[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_error_exit_codes(capsys, monkeypatch, tmp_path):
    code, _, err = run(capsys, monkeypatch, ["lines"], stdin="point 0 ; 0 ; 0\n")
    assert code == 2 and "line 1" in err
    code, _, err = run(capsys, monkeypatch, ["pencil", "--apex", "0;0"], stdin="field 4\npoint 1;0;0\n")
    assert code == 2
    code, _, _ = run(capsys, monkeypatch, ["lines", str(tmp_path / "missing.txt")])
    assert code == 2


def test_module_entry_point(fermat3):
    proc = subprocess.run([sys.executable, "-m", "sgpencil", "sg-check", fermat3],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "sg=true" in proc.stdout
