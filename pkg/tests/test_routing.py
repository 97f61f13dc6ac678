import pytest

from conftest import random_graphs
from orderedpatterns.graph import OrderedGraph, is_realization
from orderedpatterns.oracle import brute_detect
from orderedpatterns.pattern import Pattern, catalog_pattern, flat_cycle, p4_pattern, pf_pattern
from orderedpatterns.report import DetectionReport, EngineError
from orderedpatterns.routing import ENGINES, auto_engine, detect


def test_auto_picks_the_most_specific_engine():
    assert auto_engine(Pattern(2, [(1, 2)])) == "trivial"
    assert auto_engine(catalog_pattern("chordal")) == "three"
    assert auto_engine(Pattern(5, [(1, 5), (2, 3)])) == "forest"
    assert auto_engine(pf_pattern("b")) == "geometry"
    assert auto_engine(pf_pattern("bc")) == "merge"
    assert auto_engine(flat_cycle(5)) == "merge"
    # positive P4 orderings are forests too, and forest is tried first
    assert auto_engine(p4_pattern(8)) in ("forest", "p4")


@pytest.mark.parametrize(
    "P",
    [Pattern(1), Pattern(2), Pattern(2, [(1, 2)]), Pattern(2, [], [(1, 2)])],
    ids=["k1", "k2-free", "k2-edge", "k2-non-edge"],
)
def test_trivial_engine(P):
    for G in random_graphs(60, 6, seed=2):
        r = detect(G, P)
        assert r.found == brute_detect(G, P).found
        if r.found:
            assert is_realization(G, r.witness, P)


def test_every_applicable_engine_agrees():
    pats = [catalog_pattern("split"), p4_pattern(5, True), pf_pattern("a"), flat_cycle(4), Pattern(4, [(1, 2)], [(3, 4)])]
    for G in random_graphs(60, 9, seed=8):
        for P in pats:
            want = brute_detect(G, P).found
            for e in ENGINES:
                try:
                    r = detect(G, P, e)
                except EngineError:
                    continue
                assert r.found == want, (e, P)


def test_named_engine_that_does_not_apply():
    G = OrderedGraph(4)
    with pytest.raises(EngineError):
        detect(G, flat_cycle(4), "forest")
    with pytest.raises(EngineError):
        detect(G, flat_cycle(4), "p4")
    with pytest.raises(EngineError):
        detect(G, flat_cycle(4), "three")
    with pytest.raises(EngineError):
        detect(G, flat_cycle(4), "geometry")
    with pytest.raises(EngineError):
        detect(G, flat_cycle(4), "auto", p4_variant=1)
    with pytest.raises(ValueError):
        detect(G, flat_cycle(4), "quantum")


def test_pattern_larger_than_graph():
    r = detect(OrderedGraph(3), flat_cycle(5))
    assert not r.found and r.notes


def test_report_round_trip():
    r = DetectionReport(True, (1, 3), engine="oracle")
    assert r.line() == "FOUND 1 3"
    assert r.to_dict()["witness"] == [1, 3]
    assert DetectionReport(False).line() == "NOT-FOUND"
    with pytest.raises(ValueError):
        DetectionReport(True)
