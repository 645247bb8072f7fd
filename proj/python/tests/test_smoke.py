import pathlib

import pytest

import dmincut

DATA = pathlib.Path(__file__).resolve().parents[2] / "tests" / "data"


def test_parse_and_oracles():
    g = dmincut.parse_edge_list("3 2\n1 2 3\n2 3 4")
    assert (g.n, g.m) == (3, 2)
    assert g.weight(2, 3) == 4
    value, sides, count = dmincut.brute_force_mincut(g)
    assert value == 3 and sides == [0, 1, 1] and count == 1
    assert dmincut.stoer_wagner_mincut(g) == 3


def test_bad_graph_raises():
    with pytest.raises(ValueError):
        dmincut.parse_edge_list("3 2\n1 2 3\n1 2 4")


def test_trial_on_k2():
    g = dmincut.generate("complete:n=2,w=5")
    r = dmincut.run_trial(g, seed=3)
    assert r["value"] == 5
    assert r["contractions"] == []
    assert r["cut_edges"] == [(1, 2, 5)]


def test_run_report():
    rep = dmincut.run(graph=str(DATA / "p3.txt"), trials=50, seed=1)
    assert rep["best_value"] == 3
    assert rep["match"] is True
    assert len(rep["trial_records"]) == 50
    assert rep == dmincut.run(graph=str(DATA / "p3.txt"), trials=50, seed=1)


def test_k_below_five_rejected():
    with pytest.raises(ValueError):
        dmincut.run(graph=str(DATA / "p3.txt"), k=4)


def test_verify_and_complexity():
    v = dmincut.verify(gen="random-connected:n=8,p=0.4,wmax=10", graphs=4, trials=3)
    assert v["passed"] and v["mismatches"] == 0
    c = dmincut.complexity("cycle:n=4", sizes=[4, 8], trials=2)
    assert [row["n"] for row in c["rows"]] == [4, 8]
    assert c["within_budget"]
