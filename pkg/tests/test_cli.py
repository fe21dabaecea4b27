import json
import subprocess
import sys

import networkx as nx

from vertexcuts.cli import main
from vertexcuts.families import named
from vertexcuts.graph import to_edge_list

C5 = "Dhc"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_find_cut_text(capsys):
    code, out, _ = run(capsys, "find-cut", "--class", "independent", C5)
    assert code == 0
    assert out.strip() == "S = {0,2}; components = [{1},{3,4}]; class = independent"
    code, out, _ = run(capsys, "find-cut", "--class", "forest", "C~")
    assert (code, out.strip()) == (0, "none")


def test_find_cut_machine(capsys):
    code, out, _ = run(capsys, "find-cut", "--class", "independent", "--format", "machine", C5, "C~")
    recs = [json.loads(line) for line in out.splitlines()]
    assert recs[0]["cut"]["S"] == [0, 2] and recs[1]["cut"] is None


def test_find_cut_from_edge_list_file(capsys, tmp_path):
    f = tmp_path / "c5.txt"
    f.write_text(to_edge_list(named("C5")))
    code, out, _ = run(capsys, "find-cut", "--class", "independent", "--file", str(f))
    assert code == 0 and out.startswith("S = {0,2}")


def test_verify_enumerate(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "forest", "--enumerate", "--n-max", "6")
    assert code == 0 and "violations: 0" in out


def test_verify_exit_codes(capsys, tmp_path):
    f = tmp_path / "g.g6"
    f.write_text("E{Sw\nC~\n")  # prism has no independent cut; K4 is above the chen-yu gate
    code, out, _ = run(capsys, "verify", "--theorem", "independent", "--input", str(f), "--preset", "conjecture")
    assert code == 0  # the chen-yu statement is not claimed under (3, 6)
    assert "E{Sw" in out
    code, _, _ = run(capsys, "verify", "--theorem", "bipartite", "--input", str(f))
    assert code == 0


def test_verify_exit_one_on_violation(capsys, tmp_path, monkeypatch):
    from vertexcuts import census
    f = tmp_path / "g.g6"
    f.write_text("Dhc\n")
    monkeypatch.setattr(census, "find_cut_set", lambda g, cls: None)
    code, out, _ = run(capsys, "verify", "--theorem", "forest", "--input", str(f))
    assert code == 1 and "Dhc" in out
    code, out, _ = run(capsys, "verify", "--theorem", "conjecture", "--input", str(f))
    assert code == 0 and "Dhc" in out


def test_verify_machine(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "independent", "--n-max", "5", "--format", "machine")
    recs = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and any(r.get("n") == 5 for r in recs)


def test_verify_n8_gate(capsys):
    code, _, err = run(capsys, "verify", "--theorem", "forest", "--n-min", "8", "--n-max", "8")
    assert code == 2 and "--allow-n8" in err


def test_filter(capsys):
    code, out, _ = run(capsys, "filter", "--class", "forest", "--all-checks", "E{Sw")
    assert code == 0 and "min-degree" in out and out.strip().endswith("overall: fail")
    code, out, _ = run(capsys, "filter", "--class", "bipartite", "--format", "machine", "F~~~w")
    recs = [json.loads(line) for line in out.splitlines()]
    assert recs[-1]["overall"] == "fail"


def test_gen(capsys, tmp_path):
    f = tmp_path / "s.txt"
    f.write_text("a = named K4\nb = glue a a 0:0 1:1 2:2\n")
    code, out, _ = run(capsys, "gen", str(f))
    k5_minus_edge = nx.complete_graph(5)
    k5_minus_edge.remove_edge(3, 4)
    assert code == 0 and out.strip().encode() == nx.to_graph6_bytes(k5_minus_edge, header=False).strip()
    code, out, _ = run(capsys, "gen", str(f), "--format", "machine")
    assert json.loads(out)["m"] == 9
    code, out, _ = run(capsys, "gen", "--script-help")
    assert "apollonian" in out
    f.write_text("bogus 1\n")
    code, _, err = run(capsys, "gen", str(f))
    assert code == 2 and "unknown op" in err


def test_stats(capsys):
    code, out, _ = run(capsys, "stats", "Cr")  # the 4-cycle 0-1-3-2-0
    assert code == 0 and "A = [0, 3]" in out and "threshold" in out
    code, out, _ = run(capsys, "stats", "--format", "machine", "Cr")
    recs = [json.loads(line) for line in out.splitlines()]
    assert recs[0]["m"] == 4 and sum(r["record"] == "inequality" for r in recs) == 9


def test_convert(capsys, tmp_path):
    f = tmp_path / "e.txt"
    f.write_text("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    code, out, _ = run(capsys, "convert", "--file", str(f))
    assert (code, out.strip()) == (0, C5)
    code, out, _ = run(capsys, "convert", "--to", "edgelist", C5)
    assert out == to_edge_list(named("C5"))


def test_bad_input(capsys):
    code, _, err = run(capsys, "find-cut", "--class", "forest", "C")
    assert code == 2 and "error" in err


def test_unknown_flag_exits_2():
    proc = subprocess.run([sys.executable, "-m", "vertexcuts", "find-cut", "--bogus"],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and "usage" in proc.stderr


def test_stable_output(capsys):
    first = run(capsys, "find-cut", "--class", "bipartite", "--format", "machine", "E{Sw", C5)
    assert first == run(capsys, "find-cut", "--class", "bipartite", "--format", "machine", "E{Sw", C5)
