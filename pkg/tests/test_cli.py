import json
import subprocess
import sys

import pytest

from recolor.cli import main
from recolor.constructions import build_gtk, build_mk
from recolor.formats import from_graph6, from_json, to_graph6
from recolor.graph import complete_graph, path_graph


@pytest.fixture
def k3_file(tmp_path):
    p = tmp_path / "k3.g6"
    p.write_text("Bw\n")
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_gtk_json(capsys):
    code, out, _ = run(capsys, "construct", "gtk:4,5", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    g = from_json(out)
    assert g == build_gtk(4, 5)[0]
    assert obj["meta"]["pairs"] == [[1, 1], [1, 2], [2, 2], [2, 3], [3, 3], [3, 4], [4, 4], [4, 1], [5, 1], [5, 3]]
    assert obj["coloring"]["assign"] == [1, 1, 2, 2, 3, 3, 4, 4, 5, 5]
    assert obj["graph"]["labels"]["0"] == "u1"


def test_construct_graph6_and_coloring_out(capsys, tmp_path):
    col = tmp_path / "c.json"
    code, out, err = run(capsys, "construct", "mk:3", "--coloring-out", str(col))
    assert code == 0
    assert from_graph6(out.strip()) == build_mk(3)[0]
    assert json.loads(col.read_text()) == {"k": 3, "assign": [1, 2, 3, 1, 2, 3]}


def test_construct_dot_to_file(capsys, tmp_path):
    dest = tmp_path / "g.dot"
    code, out, _ = run(capsys, "construct", "catalog:1", "--format", "dot", "--out", str(dest))
    assert code == 0 and out == ""
    text = dest.read_text()
    assert '0 [label="x1"];' in text and "0 -- 4;" in text


def test_construct_bad_spec(capsys):
    code, _, err = run(capsys, "construct", "nope:3")
    assert code == 2 and "unknown construction" in err


def test_construct_domain_error(capsys):
    code, _, err = run(capsys, "construct", "gtk:4,9")
    assert code == 3 and err.startswith("OutOfRange")


def test_usage_errors(capsys, k3_file):
    assert run(capsys, "analyze", k3_file)[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "analyze", k3_file, "-k", "0")[0] == 2
    assert run(capsys, "analyze", "/no/such/file", "-k", "3")[0] == 2
    assert run(capsys, "check", k3_file)[0] == 2
    assert run(capsys, "verify", "no-such-scenario")[0] == 2


def test_mixing_k3(capsys, k3_file):
    code, out, _ = run(capsys, "mixing", k3_file, "-k", "3")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "not-mixing"
    assert json.loads(lines[1])["frozen"]["k"] == 3
    code, out, _ = run(capsys, "mixing", k3_file, "-k", "4")
    assert out.strip() == "mixing"


def test_mixing_single_coloring_is_mixing(capsys, tmp_path):
    p = tmp_path / "k1.g6"
    p.write_text("@\n")
    code, out, _ = run(capsys, "mixing", str(p), "-k", "1")
    assert out.strip() == "mixing"


def test_analyze_report(capsys, k3_file):
    code, out, _ = run(capsys, "analyze", k3_file, "-k", "3")
    rep = json.loads(out)
    assert (rep["total"], rep["components"], rep["mixing"]) == (6, 6, False)
    assert len(rep["frozen"]) == 6


def test_analyze_guard(capsys, k3_file, monkeypatch):
    code, _, err = run(capsys, "analyze", k3_file, "-k", "3", "--limit", "5")
    assert code == 3 and err.startswith("StateSpaceTooLarge")
    monkeypatch.setenv("RECOLOR_LIMIT", "5")
    assert run(capsys, "analyze", k3_file, "-k", "3")[0] == 3


def test_frozen_verb(capsys, k3_file, tmp_path):
    code, out, _ = run(capsys, "frozen", k3_file, "-k", "3", "--all")
    assert len(out.splitlines()) == 6
    p = tmp_path / "p3.g6"
    p.write_text(to_graph6(path_graph(3)).decode())
    code, out, _ = run(capsys, "frozen", str(p), "-k", "3")
    assert out.strip() == "none"


def test_path_verb(capsys, tmp_path):
    g = tmp_path / "p3.g6"
    g.write_text(to_graph6(path_graph(3)).decode())
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    a.write_text('{"k": 3, "assign": [1, 2, 1]}')
    b.write_text('{"k": 3, "assign": [2, 1, 2]}')
    code, out, _ = run(capsys, "path", str(g), "-k", "3", "--from", str(a), "--to", str(b))
    steps = json.loads(out)
    assert code == 0 and len(steps) >= 3
    assert set(steps[0]) == {"vertex", "old", "new"}
    a.write_text('{"k": 2, "assign": [1, 2, 1]}')
    b.write_text('{"k": 2, "assign": [2, 1, 2]}')
    code, out, _ = run(capsys, "path", str(g), "-k", "2", "--from", str(a), "--to", str(b))
    assert out.strip() == "disconnected"


def test_check_verb(capsys, tmp_path):
    p = tmp_path / "g.json"
    p.write_text(json.dumps({"n": 5, "edges": [[0, 1], [1, 2], [2, 3], [3, 4]]}))
    code, out, _ = run(
        capsys, "check", str(p), "--pl-free", "5", "--chromatic", "--clique", "--pattern", "gem", "--false-twins"
    )
    obj = json.loads(out)
    assert obj["pl_free"] == {"length": 5, "free": False, "witness": [0, 1, 2, 3, 4]}
    assert obj["chromatic"]["value"] == 2
    assert obj["clique"] == {"value": 2, "witness": [0, 1]}
    assert obj["pattern"]["contains"] is False
    assert [0, 2] in obj["false_twins"]


def test_check_p5bar(capsys, tmp_path):
    p = tmp_path / "k5.g6"
    p.write_text(to_graph6(complete_graph(5)).decode())
    code, out, _ = run(capsys, "check", str(p), "--pattern", "p5bar")
    assert json.loads(out)["pattern"]["contains"] is False


def test_export(capsys, k3_file):
    code, out, _ = run(capsys, "export", k3_file, "--format", "dot")
    assert out.startswith("graph G {") and "0 -- 1;" in out


def test_verify_verb(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, out, err = run(capsys, "verify", "prop-2.1", "--report", str(report))
    assert code == 0
    assert json.loads(out)["pass"] is True
    assert "PASS prop-2.1" in err
    data = json.loads(report.read_text())
    assert isinstance(data, list) and data[0]["scenario"] == "prop-2.1"


def test_verify_failure_exit(capsys, monkeypatch):
    import recolor.verify as v

    monkeypatch.setitem(v.SCENARIOS, "broken", ("always fails", lambda a, d, w: (False, {"counterexample": "Bw"})))
    code, out, _ = run(capsys, "verify", "broken")
    assert code == 1 and json.loads(out)["pass"] is False


def test_pipeline_roundtrip():
    cmd = [sys.executable, "-m", "recolor"]
    built = subprocess.run(cmd + ["construct", "mk:3"], capture_output=True, text=True, check=True)
    analyzed = subprocess.run(cmd + ["analyze", "-", "-k", "3"], input=built.stdout, capture_output=True, text=True)
    assert analyzed.returncode == 0
    rep = json.loads(analyzed.stdout)
    assert (rep["total"], rep["components"]) == (66, 7)
