import json

import pytest

from conftest import diamond_instance
from robust_coloring.cli import main
from robust_coloring.graph import Graph, complement, write_dimacs


@pytest.fixture
def pair(tmp_path):
    def make(g, h, name="inst"):
        gp, hp = tmp_path / f"{name}.g.col", tmp_path / f"{name}.h.col"
        write_dimacs(g, str(gp))
        write_dimacs(h, str(hp))
        return str(gp), str(hp)

    return make


def run_json(capsys, argv):
    code = main(argv + ["--json"])
    return code, json.loads(capsys.readouterr().out)


def test_solve_k33(pair, capsys):
    g = Graph.complete_bipartite(3, 3)
    code, out = run_json(capsys, ["solve", *pair(g, complement(g)), "-k", "3"])
    assert code == 0 and out["optimum"] == 4


def test_solve_diamond(pair, capsys):
    inst = diamond_instance()
    code, out = run_json(capsys, ["solve", *pair(inst.g, inst.h), "-k", "3", "--deterministic"])
    assert code == 0 and out["optimum"] == 1


def test_solve_k2_route(pair, capsys):
    code, out = run_json(capsys, ["solve", *pair(Graph.empty(3), Graph.complete(3)), "-k", "2", "--k2"])
    assert code == 0 and out["optimum"] == 1


def test_overlap_exit_code(pair, capsys):
    e = Graph(2, [(0, 1)])
    assert main(["solve", *pair(e, e), "-k", "2"]) == 2
    assert "shares" in capsys.readouterr().err


def test_missing_file(capsys):
    assert main(["solve", "/nonexistent.g", "/nonexistent.h", "-k", "2"]) == 2


def test_infeasible_exit_code(pair):
    assert main(["solve", *pair(Graph.complete(3), Graph.empty(3)), "-k", "2"]) == 1


def test_greedy_identity_on_path(pair, capsys):
    code, out = run_json(capsys, ["greedy", *pair(Graph.path(5), Graph.empty(5)), "-k", "2", "--order", "identity"])
    assert code == 0 and list(out["coloring"].values()) == [0, 1, 0, 1, 0]


def test_greedy_order_file(pair, capsys, tmp_path):
    order = tmp_path / "order.txt"
    order.write_text("c reversed\n5 4 3\n2 1\n")
    files = pair(Graph.path(5), Graph.empty(5))
    outs = [run_json(capsys, ["greedy", *files, "-k", "2", "--order", str(order)])[1] for _ in range(2)]
    assert outs[0] == outs[1] and outs[0]["ordering"] == [5, 4, 3, 2, 1]


def test_greedy_search(pair, capsys):
    g = Graph.wheel(8)
    code, out = run_json(capsys, ["greedy", *pair(g, complement(g)), "-k", "4", "--search"])
    assert code == 0 and out["mono"] == 5


def test_greedy_stuck(pair, capsys, tmp_path):
    order = tmp_path / "order.txt"
    order.write_text("1 3 2 4\n")
    code = main(["greedy", *pair(Graph.path(4), Graph(4, [(0, 2)])), "-k", "2", "--order", str(order)])
    assert code == 1 and "vertex" in capsys.readouterr().err


def test_bounds_tree(pair, capsys):
    t = Graph(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)])
    h = complement(t)
    code, out = run_json(capsys, ["bounds", *pair(t, h), "-k", "3"])
    values = {b["name"]: b["value"] for b in out["bounds"]}
    assert code == 0 and values["orientation bound (tree)"] == str(h.num_edges / 2).rstrip("0").rstrip(".")


def test_bounds_path_and_not_applicable(pair, capsys):
    g, h = Graph.path(6), Graph(6, [(0, 2), (2, 4), (1, 3), (3, 5)])
    code, out = run_json(capsys, ["bounds", *pair(g, h), "-k", "3"])
    values = {b["name"]: b for b in out["bounds"]}
    assert values["path bound"]["value"] == 1
    g = Graph.complete(4)
    code, out = run_json(capsys, ["bounds", *pair(g, Graph.empty(4)), "-k", "3"])
    entry = {b["name"]: b for b in out["bounds"]}["class-merge bound"]
    assert entry["value"] is None and "not applicable" in entry["note"]


def test_path3(pair, capsys):
    g, h = Graph.path(8), Graph(8, [(0, 2), (2, 4), (4, 6), (1, 3), (3, 5), (5, 7)])
    code, out = run_json(capsys, ["path3", *pair(g, h)])
    assert code == 0 and out["mono"] <= out["bound"] == 1
    assert isinstance(out["trace"], list)


def test_path3_rejects_non_path(pair):
    assert main(["path3", *pair(Graph.cycle(4), Graph.empty(4))]) == 2


@pytest.mark.parametrize("family, expected", [("tree", 1), ("exact", 1)])
def test_orient(pair, capsys, family, expected):
    g_path, _ = pair(Graph.path(5), Graph.empty(5))
    code, out = run_json(capsys, ["orient", g_path, "--family", family])
    assert code == 0 and out["max_in_degree"] == expected and out["alpha"] == 0


def test_gen_round_trip(tmp_path, capsys):
    from robust_coloring.graph import read_dimacs

    prefix = str(tmp_path / "w")
    assert main(["gen", "wheel", "8", "--out", prefix]) == 0
    assert read_dimacs(prefix + ".g.col") == Graph.wheel(8)
    assert main(["gen", "complete-bipartite", "3", "3", "--out", prefix]) == 0
    assert read_dimacs(prefix + ".g.col") == Graph.complete_bipartite(3, 3)


def test_gen_deterministic(capsys):
    main(["gen", "random", "9", "--seed", "4"])
    first = capsys.readouterr().out
    main(["gen", "random", "9", "--seed", "4"])
    assert capsys.readouterr().out == first


@pytest.mark.parametrize("suite", ["oracle", "k2", "greedy", "path"])
def test_verify(suite, capsys):
    code, out = run_json(capsys, ["verify", suite, "--count", "15", "--n", "7"])
    assert code == 0 and out["failures"] == 0
