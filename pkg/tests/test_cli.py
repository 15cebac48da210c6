import json
import subprocess
import sys

import pytest

from exact3 import SynthesisScript, decompose, is_isomorphic, replay
from exact3.cli import main
from exact3.families import complete, cycle, thick_path
from exact3.io import format_edge_list, read_graph


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_exit_codes(files, capsys):
    db = files("db.txt", "2 1\n0 1 3\n")
    assert run(capsys, "verify", db) == (0, "EXACT k=3\n", "")
    c4 = files("c4.txt", format_edge_list(cycle(4)))
    code, out, _ = run(capsys, "verify", c4)
    assert code == 1 and "lambda(0,1) = 2" in out
    bad = files("bad.txt", "2 1\n0 1\n")
    code, _, err = run(capsys, "verify", bad)
    assert code == 2 and "line 2" in err


def test_verify_json_schema(files, capsys):
    c4 = files("c4.txt", format_edge_list(cycle(4)))
    code, out, _ = run(capsys, "verify", c4, "--json")
    doc = json.loads(out)
    assert code == 1 and doc["command"] == "verify" and doc["ok"] is False
    assert doc["exit"] == 1 and doc["witness"] == {"u": 0, "v": 1, "lambda": 2}
    bad = files("bad.txt", "2 1\nx y z\n")
    code, out, _ = run(capsys, "verify", bad, "--json")
    doc = json.loads(out)
    assert code == 2 and doc["error"]["type"] == "FormatError" and doc["error"]["line"] == 2


def test_verify_k_override(files, capsys):
    c4 = files("c4.txt", format_edge_list(cycle(4)))
    assert run(capsys, "verify", c4, "--k", "2")[0] == 0


def test_missing_file(capsys):
    assert run(capsys, "verify", "/nonexistent/graph.txt")[0] == 2


def test_decompose_k4(files, capsys):
    k4 = files("k4.txt", format_edge_list(complete(4)))
    code, out, _ = run(capsys, "decompose", k4)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2 and lines[0].startswith("DUMBBELL") and lines[1].startswith("EXPAND")
    code, out, _ = run(capsys, "decompose", k4, "--provenance")
    assert out.startswith("# provenance ")


def test_decompose_thick_path_glue_only(files, capsys):
    p = files("tp.txt", format_edge_list(thick_path(3)))
    code, out, _ = run(capsys, "decompose", p)
    assert code == 0 and "EXPAND" not in out and out.count("GLUE") == 2


def test_decompose_non_exact(files, capsys):
    c4 = files("c4.txt", format_edge_list(cycle(4)))
    code, out, _ = run(capsys, "decompose", c4, "--json")
    assert code == 1 and json.loads(out)["witness"]["lambda"] == 2


def test_decompose_replay_verify_pipeline(files, capsys, small_corpus):
    for i, g in enumerate(small_corpus[::7]):
        src = files(f"g{i}.txt", format_edge_list(g))
        code, script, _ = run(capsys, "decompose", src, "--thick-tree")
        assert code == 0
        sp = files(f"s{i}.txt", script)
        code, rebuilt, _ = run(capsys, "replay", sp)
        assert code == 0 and is_isomorphic(read_graph(rebuilt), g)
        rp = files(f"r{i}.txt", rebuilt)
        assert run(capsys, "verify", rp)[0] == 0


def test_replay_errors(files, capsys):
    sp = files("s.txt", "DUMBBELL 0\nGLUE 0 0 4 0 1\n")
    code, out, _ = run(capsys, "replay", sp, "--json")
    doc = json.loads(out)
    assert code == 2 and doc["error"]["line"] == 2


def test_enumerate_counts(capsys):
    code, out, err = run(capsys, "enumerate", "--max-n", "4", "--simple", "--biconnected",
                         "--count-only")
    assert code == 0 and out == "" and "4\t1" in err.splitlines()


def test_enumerate_stream_and_minimum(capsys):
    code, out, err = run(capsys, "enumerate", "--max-n", "6", "--minimum")
    assert code == 0
    for line in out.splitlines():
        n, _, edges = line.split("\t")
        m = sum(int(e.split()[2]) for e in edges.split(";"))
        assert m == (3 * int(n) + 1) // 2


def test_enumerate_json_and_jobs(capsys):
    a = json.loads(run(capsys, "enumerate", "--max-n", "6", "--json", "--count-only")[1])
    b = json.loads(run(capsys, "enumerate", "--max-n", "6", "--json", "--count-only",
                       "--jobs", "2")[1])
    assert a["counts"] == b["counts"] == {"2": 1, "3": 2, "4": 8, "5": 31, "6": 173}


def test_enumerate_budget(capsys):
    code, _, err = run(capsys, "enumerate", "--max-n", "12", "--budget-seconds", "0.05",
                       "--count-only")
    assert code == 3 and err.startswith("2\t1")


def test_enumerate_bad_args(capsys):
    assert run(capsys, "enumerate", "--max-n", "1")[0] == 2


def test_expand_and_glue(files, capsys):
    db = files("db.txt", "2 1\n0 1 3\n")
    code, out, _ = run(capsys, "expand", db, "--vertex", "1", "--cycle-size", "3",
                       "--darts", "1~0#0,1~0#1,1~0#2")
    assert code == 0 and is_isomorphic(read_graph(out), complete(4))
    assert run(capsys, "expand", db, "--vertex", "1", "--cycle-size", "3",
               "--darts", "garbage")[0] == 2
    k4 = files("k4.txt", format_edge_list(complete(4)))
    code, out, _ = run(capsys, "glue", k4, k4, "--u1", "0", "--u2", "0", "--vertex")
    g = read_graph(out)
    assert code == 0 and g.order == 6
    code, out, _ = run(capsys, "glue", k4, db, "--u1", "0", "--u2", "0")
    assert code == 0 and read_graph(out).order == 5
    code, _, _ = run(capsys, "glue", k4, db, "--u1", "0", "--u2", "0", "--vertex", "--k", "4")
    assert code == 1


def test_export_formats(files, capsys):
    k4 = files("k4.txt", format_edge_list(complete(4)))
    assert run(capsys, "export", k4, "--to", "graph6")[1] == "C~\n"
    assert run(capsys, "export", k4, "--to", "dot")[1].startswith("graph G {")
    db = files("db.txt", "2 1\n0 1 3\n")
    assert run(capsys, "export", db, "--to", "graph6")[0] == 1
    g6 = files("k4.g6", "C~\n")
    assert run(capsys, "verify", g6, "--format", "graph6")[0] == 0


def test_module_entry_point(files):
    db = files("db.txt", "2 1\n0 1 3\n")
    proc = subprocess.run([sys.executable, "-m", "exact3", "verify", db],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "EXACT k=3\n"
