import json
import subprocess
import sys

import pytest

from orderedpatterns.cli import bench_rows, main
from orderedpatterns.graph import parse_ordered_graph
from orderedpatterns.merge import parse_tree, validate_merge_tree
from orderedpatterns.pattern import flat_cycle


@pytest.fixture
def files(tmp_path):
    g = tmp_path / "g.txt"
    g.write_text("5 5\n1 2\n1 4\n2 3\n2 4\n3 4\n")
    p = tmp_path / "p.txt"
    p.write_text("3\n1 2 M\n2 3 M\n1 3 F\n")
    return tmp_path, g, p


def test_detect_plain(files, capsys):
    _, g, p = files
    assert main(["detect", "--graph", str(g), "--pattern", str(p)]) == 0
    assert capsys.readouterr().out.strip() == "FOUND 1 2 3"


def test_detect_json_and_exit_code(files, capsys):
    _, g, _ = files
    rc = main(["detect", "--graph", str(g), "--pattern-name", "flat-cycle-4", "--json", "--exit-code"])
    d = json.loads(capsys.readouterr().out)
    assert d["found"] is True and d["witness"] == [1, 2, 3, 4] and d["engine"] == "merge"
    assert (d["n"], d["m"]) == (5, 5) and rc == 1
    rc = main(["detect", "--graph", str(g), "--pattern-name", "flat-cycle-5", "--exit-code"])
    assert rc == 0


def test_detect_p4_flags(files, capsys):
    _, g, _ = files
    assert main(["detect", "--graph", str(g), "--p4-variant", "1"]) == 0
    assert capsys.readouterr().out.startswith("FOUND")


def test_artifacts(files):
    tmp, g, _ = files
    red, tree = tmp / "red.txt", tmp / "tree.txt"
    rc = main(["detect", "--graph", str(g), "--pattern-name", "flat-cycle-4", "--emit-reduction", str(red), "--dump-tree", str(tree)])
    assert rc == 0
    assert parse_ordered_graph(red.read_text()).n == 20
    assert validate_merge_tree(parse_tree(tree.read_text()), flat_cycle(4)).ok


def test_usage_errors(files, capsys):
    tmp, g, p = files
    assert main(["detect", "--graph", str(tmp / "missing"), "--pattern", str(p)]) == 2
    assert main(["detect", "--graph", str(g)]) == 2
    assert main(["detect", "--graph", str(g), "--pattern-name", "bogus"]) == 2
    bad = tmp / "bad.txt"
    bad.write_text("3 1\n3 1\n")
    assert main(["detect", "--graph", str(bad), "--pattern", str(p)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_engine_error(files):
    _, g, p = files
    assert main(["detect", "--graph", str(g), "--pattern", str(p), "--engine", "geometry"]) == 3


def test_verify(files, capsys):
    _, g, _ = files
    assert main(["verify", "--graph", str(g), "--pattern-name", "p-b", "--engines", "geometry,merge,clique"]) == 0
    assert "AGREE" in capsys.readouterr().out
    assert main(["verify", "--n", "9", "--m", "14", "--seed", "2", "--pattern-name", "p4-6"]) == 0
    assert main(["verify", "--n", "3", "--m", "9", "--pattern-name", "chordal"]) == 2


def test_gen(tmp_path, capsys):
    out = tmp_path / "g.txt"
    assert main(["gen", "--n", "50", "--m", "100", "--seed", "1", "--out", str(out)]) == 0
    G = parse_ordered_graph(out.read_text())
    assert (G.n, G.m) == (50, 100)
    assert main(["gen", "--n", "30", "--density", "0.2"]) == 0
    assert parse_ordered_graph(capsys.readouterr().out).n == 30
    assert main(["gen", "--n", "5", "--m", "2", "--density", "0.3"]) == 2


def test_bench(capsys):
    rows = bench_rows(flat_cycle(3), [50, 100], repeats=1)
    assert [(n, m) for n, m, _ in rows] == [(50, 250), (100, 500)]
    assert main(["bench", "--pattern-name", "chordal", "--sizes", "100,200", "--repeats", "1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "n,m,millis" and len(lines) == 3
    assert main(["bench", "--pattern-name", "chordal", "--sizes", "x"]) == 2


def test_module_entry_point(files):
    _, g, p = files
    out = subprocess.run(
        [sys.executable, "-m", "orderedpatterns", "detect", "--graph", str(g), "--pattern", str(p)],
        capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "FOUND 1 2 3"
