import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from fixtures import isosceles, vertex_document
from quasigeo import cli
from quasigeo.errors import InternalContradiction

DATA = Path(__file__).parent / "data"


def run(*argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def data(name):
    return DATA / f"{name}.json"


def test_q3_one_q3():
    code, out, _ = run("q3", data("one_q3"))
    assert code == 0 and out.startswith("Q3: boundary of face C")
    code, out, _ = run("q3", data("one_q3"), "--json")
    rec = json.loads(out)
    assert rec["face"] == "C" and rec["failing"]["C"] == []


def test_q1_isosceles_exit_zero():
    code, out, _ = run("q1", data("isosceles"))
    assert code == 0 and out.startswith("no 1-vertex quasigeodesic (isosceles)")
    code, out, _ = run("q1", data("isosceles"), "--json")
    assert json.loads(out)["found"] is False


@pytest.mark.parametrize("name,case", [("case_1", "Case 1"), ("case_2_1", "Case 2.1"),
                                       ("case_2_2_1", "Case 2.2.1"), ("case_2_2_2", "Case 2.2.2"),
                                       ("case_2_2_3", "Case 2.2.3")])
def test_q1_cases(name, case):
    code, out, _ = run("q1", data(name), "--json")
    rec = json.loads(out)
    assert code == 0 and rec["case"] == case and rec["verification"]["verdict"] == "Quasigeodesic"


def test_enumerate_counts():
    code, out, _ = run("enumerate", data("near_regular"), "--json")
    assert code == 0 and json.loads(out)["counts"]["total"] == 28
    code, out, _ = run("enumerate", data("one_q3"))
    assert "total: 4" in out.splitlines()[0]


def test_all_commands_run():
    f = data("pointed_one_q1")
    for argv in (["validate", f], ["classify", f], ["q1", f], ["q2", f], ["q3", f], ["q4", f],
                 ["q4", f, "--partition", "AC|BD"], ["enumerate", f, "--depth", "5"],
                 ["unfold", f, "--vertex", "b", "--cut-locus"],
                 ["verify", f, "--curve", "a (B) d (C)"],
                 ["trace", f, "--start", "ab:0.5", "--direction", "80"],
                 ["sweep", f, "--vertex", "b"]):
        code, out, err = run(*argv)
        assert code == 0, (argv, err)
        code, out, err = run(*argv, "--json")
        assert json.loads(out)["command"] == argv[0]


def _angle_doc(tmp_path, name="one_q3"):
    path = tmp_path / "angles.json"
    code, _, _ = run("classify", data(name), "--emit-angles", path)
    assert code == 0
    return path


def test_emit_angles_roundtrip(tmp_path):
    path = _angle_doc(tmp_path)
    doc = json.loads(path.read_text())
    assert set(doc) == {"angles"} and len(doc["angles"]) == 12
    for cmd in ("classify", "q3", "q4", "validate"):
        a = run(cmd, data("one_q3"), "--json")[1]
        b = run(cmd, path, "--json")[1]
        ra, rb = json.loads(a), json.loads(b)
        for r in (ra, rb):
            r.pop("mode", None)
        # needs edge lengths, so coordinate mode only
        assert "acute_endpoint_of_longest_edge" not in rb
        ra.pop("acute_endpoint_of_longest_edge", None)
        if cmd == "validate":
            assert rb["valid"] and ra["angles_deg"] == rb["angles_deg"]
        else:
            assert ra == rb


@pytest.mark.parametrize("cmd", ["q1", "q2", "enumerate", "unfold", "sweep", "verify", "trace"])
def test_angle_mode_rejected_for_coordinate_commands(tmp_path, cmd):
    path = _angle_doc(tmp_path)
    extra = {"verify": ["--curve", "a (B) d (C)"], "trace": ["--start", "a", "--direction", "1"]}
    code, _, err = run(cmd, path, *extra.get(cmd, []))
    assert code == 2 and "coordinates" in err


@pytest.mark.parametrize("text", [
    "{", "[]", '{"vertices": {"a": [0, 0, 0]}}', '{"vertices": {}, "angles": {}}',
    '{"vertices": {"a": [0,0,0], "b": [1,0,0], "c": [0,1,0], "d": [0,0,"x"]}}',
    '{"vertices": {"a": [0,0,0], "b": [1,0,0], "c": [0,1,0], "d": [0,0,1]}, "extra": 1}',
    '{"vertices": {"a": [0,0,0], "b": [1,0,0], "c": [0,1,0], "d": [0,0,1]}, "settings": {"epsilon": -1}}',
    '{"vertices": {"a": [0,0,0], "b": [1,0,0], "c": [0,1,0], "d": [1,1,0]}}',
    '{"vertices": {"a": [0,0,0], "b": [0,0,0], "c": [0,1,0], "d": [0,0,1]}}',
])
def test_malformed_input_exit_2(tmp_path, text):
    p = tmp_path / "bad.json"
    p.write_text(text)
    assert run("q3", p)[0] == 2


def test_usage_errors_exit_2(tmp_path):
    f = data("regular")
    assert run("nonsense", f)[0] == 2
    assert run("q3")[0] == 2
    assert run("q3", tmp_path / "missing.json")[0] == 2
    assert run("q1", f, "--svg", tmp_path / "x.svg", "--obj", tmp_path / "x.obj")[0] == 2
    assert run("trace", f, "--start", "zz", "--direction", "1")[0] == 2
    assert run("trace", f, "--start", "a", "--direction", "1", "--max-length", "-1")[0] == 2
    assert run("verify", f, "--curve", "a (Q)")[0] == 2


def test_domain_errors_exit_1(tmp_path):
    f = data("regular")
    code, _, err = run("trace", f, "--start", "a", "--direction", "0")
    assert code == 1 and "DegenerateDirection" in err
    assert run("q3", f, "--svg", tmp_path / "no" / "x.svg")[0] == 1
    assert run("verify", f, "--curve", "a (D) b (D) c (B) a (C) b (A) c (D)")[0] in (0, 1)


def test_internal_contradiction_exit_3(monkeypatch):
    def boom(*a, **k):
        raise InternalContradiction("every face fails")
    monkeypatch.setattr(cli, "construct_q3", boom)
    code, _, err = run("q3", data("regular"))
    assert code == 3 and "internal contradiction" in err


def test_eps_precedence(tmp_path, monkeypatch):
    p = tmp_path / "r.json"
    p.write_text(json.dumps(vertex_document(json.loads(data("regular").read_text())["vertices"].values())))
    monkeypatch.setenv("QUASIGEO_EPS", "1e-6")
    assert cli.read_document(str(p)).epsilon == 1e-6
    assert cli.read_document(str(p), 1e-3).epsilon == 1e-3
    monkeypatch.setenv("QUASIGEO_EPS", "zero")
    assert run("q3", p)[0] == 2
    monkeypatch.delenv("QUASIGEO_EPS")
    doc = json.loads(p.read_text())
    doc["settings"] = {"epsilon": 1e-5}
    assert cli.parse_document(json.dumps(doc)).epsilon == 1e-5


def test_eps_changes_isosceles_verdict(tmp_path):
    pts = [list(p) for p in isosceles().points]
    pts[0][2] += 1e-5
    f = tmp_path / "nudged.json"
    f.write_text(json.dumps(vertex_document(pts)))
    assert json.loads(run("classify", f, "--json")[1])["isosceles"] is False
    assert json.loads(run("classify", f, "--json", "--eps", "1e-3")[1])["isosceles"] is True


def test_exports_deterministic(tmp_path):
    f = data("pointed_one_q1")
    out = {}
    for i in range(2):
        s, o, j = tmp_path / f"{i}.svg", tmp_path / f"{i}.obj", tmp_path / f"{i}.json"
        assert run("q1", f, "--svg", s)[0] == 0
        assert run("q1", f, "--obj", o)[0] == 0
        j.write_text(run("enumerate", f, "--json")[1])
        out[i] = (s.read_bytes(), o.read_bytes(), j.read_bytes())
    assert out[0] == out[1]
    assert out[0][0].count(b"<polygon") == 4 and b"star unfolding from b" in out[0][0]
    assert out[0][1].count(b"\nl ") == 1


def test_precision_of_reports():
    _, out, _ = run("classify", data("one_q3"))
    assert "a=288.12" in out
    _, out, _ = run("validate", data("one_q3"))
    assert "longest edge: 9.69363" in out and "volume: 2.4732" in out


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "quasigeo", "q3", str(data("regular"))],
                       capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout.startswith("Q3: boundary of face A")
    p = subprocess.run([sys.executable, "-m", "quasigeo", "q3", "-"], input="{", capture_output=True, text=True)
    assert p.returncode == 2
