import io
import json
import subprocess
import sys

import pytest

from romanlab.cli import generate, main
from romanlab.graph import GraphError


def run(argv, stdin="", monkeypatch=None):
    out = io.StringIO()
    if monkeypatch is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv, out=out)
    return code, out.getvalue()


def test_solve_path7(monkeypatch):
    _, g6 = run(["gen", "path", "7"])
    code, text = run(["solve"], g6, monkeypatch)
    doc = json.loads(text)
    assert code == 0
    assert doc["result"]["gamma_r"] == 5
    assert doc["schema"] == "romanlab/1" and doc["command"] == "solve"
    assert doc["graph6"] == g6.strip()


def test_solve_complete_and_empty(monkeypatch):
    code, text = run(["solve", "--gen", "complete", "5"])
    assert json.loads(text)["result"]["gamma_r"] == 2
    code, text = run(["solve"], "?\n", monkeypatch)
    assert code == 0 and json.loads(text)["result"] == {"gamma_r": 0, "witness": ""}


def test_enumerate_digit_strings():
    code, text = run(["enumerate", "--gen", "path", "4"])
    assert json.loads(text)["result"]["functions"] == ["0201", "1020"]
    code, text = run(["enumerate", "--gen", "path", "4", "--text"])
    assert text.split() == ["0201", "1020"]


def test_classify_region_c4(monkeypatch):
    _, g6 = run(["gen", "cycle", "4"])
    code, text = run(["classify", "region", "--text"], g6, monkeypatch)
    assert code == 0 and text.strip() == "R9"
    code, text = run(["classify", "region"], g6, monkeypatch)
    assert json.loads(text)["result"]["region"] == "R9"


def test_classify_other_views():
    doc = json.loads(run(["classify", "vertices", "--gen", "path", "4"])[1])["result"]
    assert doc["minus"] == [0, 3] and doc["equal"] == [1, 2] and doc["plus"] == []
    doc = json.loads(run(["classify", "edges", "--gen", "star", "3"])[1])["result"]
    assert [r["delta"] for r in doc["removal"]] == [1, 1, 1]
    assert len(doc["addition"]) == 3
    doc = json.loads(run(["classify", "signature", "--gen", "cycle", "7"])[1])["result"]
    assert doc["cvr"] is True and doc["uea"] is False


def test_critical():
    doc = json.loads(run(["critical", "--k", "3", "--gen", "path", "7"])[1])["result"]
    assert doc == {"k": 3, "k_cvr": True}
    doc = json.loads(run(["critical", "--kmax", "5", "--gen", "cycle", "6"])[1])["result"]
    assert doc["profile"] == [False, False, True, True, True]
    assert run(["critical", "--gen", "path", "3"])[0] == 2


def test_rdgraph_dot(monkeypatch):
    _, g6 = run(["gen", "path", "5"])
    code, text = run(["rdgraph", "--type", "1a", "--format", "dot"], g6, monkeypatch)
    assert code == 0
    nodes = [ln for ln in text.splitlines() if ln.strip().endswith(";") and "--" not in ln]
    edges = [ln for ln in text.splitlines() if "--" in ln]
    assert len(nodes) == 6 and len(edges) == 2
    assert all('label="1a"' in e for e in edges)


def test_rdgraph_json_and_labels():
    doc = json.loads(run(["rdgraph", "--type", "1a3", "--gen", "path", "5"])[1])["result"]
    assert doc["type"] == "1a3"
    assert len(doc["vertices"]) == 6
    preds = {tuple(e["predicates"]) for e in doc["edges"]}
    assert ("3",) in preds
    # edge labels only name predicates of the requested type
    text = run(["rdgraph", "--type", "1a3", "--format", "dot", "--gen", "cycle", "5"])[1]
    assert 'label="1a"' in text and 'label="3"' in text
    text = run(["rdgraph", "--type", "1234", "--format", "dot", "--gen", "cycle", "5"])[1]
    assert 'label="1"' in text and 'label="1a"' not in text


def test_errors_exit_nonzero(monkeypatch, capsys):
    assert run(["solve"], "x\n", monkeypatch)[0] == 2
    assert "graph6 byte" in capsys.readouterr().err
    assert run(["rdgraph", "--type", "1a1n", "--gen", "path", "3"])[0] == 2
    assert run(["gen", "nosuch", "3"])[0] == 2
    assert run(["solve", "--gen", "cycle", "30", "--budget", "10"])[0] == 2
    assert "n=30" in capsys.readouterr().err
    with pytest.raises(SystemExit):
        main(["verify", "nosuch"])


def test_generate_families():
    assert [g.n for g in generate("trees", ["5"])] == [5, 5, 5]
    assert generate("f_h", ["@"])[0].n == 9
    assert generate("double_star", ["3", "3"])[0].m == 7
    with pytest.raises(GraphError):
        generate("path", ["x"])


def test_verify_suite_and_jobs_are_deterministic():
    code1, out1 = run(["verify", "cart", "--jobs", "1"])
    code2, out2 = run(["verify", "cart", "--jobs", "2"])
    assert code1 == code2 == 0
    assert out1 == out2
    assert "50/50 checks passed" in out1


def test_verify_oracle_paths_table():
    code, out = run(["verify", "oracle-paths"])
    assert code == 0
    rows = [ln for ln in out.splitlines() if ln.startswith("P")]
    assert len(rows) == 30 and all(" pass " in r for r in rows)


def test_verify_failure_sets_exit_code():
    # the literal region-3 witness does not land in its region
    code, out = run(["verify", "claim-examples"])
    assert code == 1
    assert "FAIL" in out


def test_repeated_runs_byte_identical():
    a = run(["enumerate", "--gen", "u_tree", "2"])[1]
    b = run(["enumerate", "--gen", "u_tree", "2"])[1]
    assert a == b


def test_console_pipeline():
    gen = subprocess.run([sys.executable, "-m", "romanlab.cli", "gen", "cycle", "4"], capture_output=True, text=True)
    res = subprocess.run(
        [sys.executable, "-m", "romanlab.cli", "classify", "region", "--text"],
        input=gen.stdout, capture_output=True, text=True,
    )
    assert res.returncode == 0 and res.stdout.strip() == "R9"
