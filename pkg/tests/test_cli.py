import io
import json
import subprocess
import sys

import pytest

from parityorient.cli import main, random_tree_edges, to_dot
from parityorient.core import Graph, Instance, is_connected


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_bad_grid_then_solve(capsys, monkeypatch):
    code, doc, _ = run(["gen", "--family", "grid", "--p", "2", "--q", "2", "--t", "all"], capsys)
    assert code == 0
    inst = json.loads(doc)
    assert inst["n"] == 4 and inst["T"] == [0, 1, 2, 3] and inst["family"] == {"kind": "grid", "p": 2, "q": 2}
    code, out, err = run(["solve"], capsys, stdin=doc, monkeypatch=monkeypatch)
    assert code == 1
    assert json.loads(out) == {"status": "no_solution", "reason": "BadGrid"}


def test_pipeline_subprocess():
    gen = subprocess.run(
        [sys.executable, "-m", "parityorient", "gen", "--family", "grid", "--p", "2", "--q", "2", "--t", "all"],
        capture_output=True,
        text=True,
        check=True,
    )
    solve = subprocess.run([sys.executable, "-m", "parityorient", "solve"], input=gen.stdout, capture_output=True, text=True)
    assert solve.returncode == 1
    assert json.loads(solve.stdout)["reason"] == "BadGrid"


def test_solve_triangle_and_check(tmp_path, capsys):
    tri = tmp_path / "tri.json"
    tri.write_text(json.dumps({"n": 3, "edges": [[0, 1], [1, 2], [0, 2]], "T": [0]}))
    sol = tmp_path / "sol.json"
    code, _, _ = run(["solve", "--instance", str(tri), "--out", str(sol)], capsys)
    assert code == 0
    doc = json.loads(sol.read_text())
    assert doc["status"] == "solution" and len(doc["arcs"]) == 3 and sorted(doc["order"]) == [0, 1, 2]
    code, out, _ = run(["check", "--instance", str(tri), "--orientation", str(sol)], capsys)
    assert code == 0 and json.loads(out)["valid"]
    code, out, _ = run(["check", "--instance", str(tri), "--order", str(sol)], capsys)
    assert code == 0


def test_check_failures(tmp_path, capsys):
    tri = tmp_path / "tri.json"
    tri.write_text(json.dumps({"n": 3, "edges": [[0, 1], [1, 2], [0, 2]], "T": [0]}))
    cyc = tmp_path / "cyc.json"
    cyc.write_text(json.dumps({"arcs": [[0, 1], [1, 2], [2, 0]]}))
    code, out, _ = run(["check", "--instance", str(tri), "--orientation", str(cyc)], capsys)
    assert code == 1 and json.loads(out)["acyclic"] is False
    order = tmp_path / "order.json"
    order.write_text(json.dumps({"order": [0, 1, 2]}))
    code, out, _ = run(["check", "--instance", str(tri), "--order", str(order)], capsys)
    assert code == 1 and json.loads(out) == {"valid": False, "index": 0}
    order.write_text(json.dumps([0, 1, 2]))
    code, out, _ = run(["check", "--instance", str(tri), "--order", str(order)], capsys)
    assert code == 1 and json.loads(out) == {"valid": False, "index": 0}
    order.write_text(json.dumps({"sequence": [0]}))
    code, _, _ = run(["check", "--instance", str(tri), "--order", str(order)], capsys)
    assert code == 3
    missing = tmp_path / "missing.json"
    missing.write_text(json.dumps({"arcs": [[0, 1]]}))
    code, _, err = run(["check", "--instance", str(tri), "--orientation", str(missing)], capsys)
    assert code == 3 and "error" in err
    code, _, _ = run(["check", "--instance", str(tri)], capsys)
    assert code == 3


def test_condition_violated_exit(tmp_path, capsys):
    f = tmp_path / "c4.json"
    f.write_text(json.dumps({"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [0, 3]], "T": [0, 1, 2, 3]}))
    code, out, _ = run(["solve", "--instance", str(f)], capsys)
    assert code == 2
    assert json.loads(out)["condition"] == "S"


def test_methods(tmp_path, capsys):
    f = tmp_path / "g.json"
    run(["gen", "--family", "cylinder", "--p", "4", "--q", "3", "--t", "0,5", "--out", str(f)], capsys)
    for method in ("auto", "oracle", "family"):
        code, out, _ = run(["solve", "--instance", str(f), "--method", method], capsys)
        assert code == 0, method
    assert json.loads(out)["method"] == "cylinder"


def test_verify_full_sweep(capsys):
    code, out, _ = run(["verify", "--family", "grid", "--p", "3", "--q", "4", "--sweep", "full"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["targets"] == 4096 and doc["mismatches"] == [] and doc["solved"] == 2048


def test_verify_reproducible(capsys):
    args = ["verify", "--family", "cylinder", "--p", "4", "--q", "3", "--sweep", "sample:60", "--seed", "5", "--details"]
    _, a, _ = run(args, capsys)
    _, b, _ = run(args + ["--threads", "3"], capsys)
    ra, rb = json.loads(a)["rows"], json.loads(b)["rows"]
    assert ra == rb and [r["T"] for r in ra] == sorted(r["T"] for r in ra)


def test_verify_bad_sweep(capsys):
    code, _, _ = run(["verify", "--family", "grid", "--p", "2", "--q", "2", "--sweep", "most"], capsys)
    assert code == 3


def test_classify_family(capsys):
    code, out, _ = run(["classify", "--family", "cylinder", "--p", "5", "--q", "2"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["placement"] == "C_P" and doc["predicted"] == "C_P"
    code, out, _ = run(["classify", "--family", "grid", "--p", "2", "--q", "2"], capsys)
    assert json.loads(out)["predicted"] is None


def test_export_dot(tmp_path, capsys):
    f = tmp_path / "g.json"
    run(["gen", "--family", "grid", "--p", "2", "--q", "2", "--t", "0", "--out", str(f)], capsys)
    code, out, _ = run(["export-dot", "--instance", str(f)], capsys)
    assert code == 0
    assert out.startswith("graph G {")
    assert '0 [fillcolor=black, fontcolor=white, label="(0,0)"];' in out
    assert "1 [fillcolor=white" in out
    assert "0 -- 1;" in out


def test_to_dot_directed():
    inst = Instance(Graph(2, [(0, 1)]), frozenset({1}))
    from parityorient.core import Orientation

    text = to_dot(inst, Orientation(2, frozenset({(0, 1)})))
    assert text.startswith("digraph") and "0 -> 1;" in text


def test_usage_errors(capsys):
    assert main(["gen", "--family", "cycle", "--p", "2"]) == 3
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 3
    assert main(["gen", "--family", "grid", "--p", "2", "--q", "2", "--t", "9"]) == 3


def test_family_block_must_match(tmp_path, capsys):
    f = tmp_path / "bad.json"
    f.write_text(json.dumps({"n": 4, "edges": [[0, 1]], "T": [], "family": {"kind": "grid", "p": 2, "q": 2}}))
    code, _, err = run(["solve", "--instance", str(f)], capsys)
    assert code == 3 and "does not match" in err


def test_random_tree_generator():
    import random

    rng = random.Random(1)
    for n in range(1, 12):
        edges = random_tree_edges(n, rng)
        g = Graph(n, edges)
        assert g.m == n - 1 and is_connected(g)
    assert random_tree_edges(9, random.Random(4)) == random_tree_edges(9, random.Random(4))


def test_gen_tree_seeded(capsys):
    _, a, _ = run(["gen", "--family", "tree", "--p", "8", "--seed", "2", "--t", "random"], capsys)
    _, b, _ = run(["gen", "--family", "tree", "--p", "8", "--seed", "2", "--t", "random"], capsys)
    assert a == b and json.loads(a)["family"]["kind"] == "tree"
