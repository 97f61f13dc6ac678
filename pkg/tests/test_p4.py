import pytest
from hypothesis import given, settings

from conftest import random_graphs
from test_graph import graphs
from orderedpatterns.graph import OrderedGraph, ScanCounter, is_realization
from orderedpatterns.oracle import brute_detect
from orderedpatterns.p4 import PHI_TEXT, SCAN_CONSTANT, build_edge_tables, detect_positive_p4, p4_variant_of
from orderedpatterns.pattern import P4_VARIANTS, Pattern, mirror_pattern, p4_pattern


def test_variant_7_examples():
    assert not detect_positive_p4(OrderedGraph(4, [(1, 2), (1, 4), (2, 3)]), 7).found
    assert detect_positive_p4(OrderedGraph(4, [(1, 2), (1, 3), (2, 4)]), 7).witness == (1, 2, 3, 4)


def test_every_variant_finds_itself():
    for v, edges in P4_VARIANTS.items():
        for mirrored in (False, True):
            P = p4_pattern(v, mirrored)
            G = OrderedGraph(4, P.mandatory)
            r = detect_positive_p4(G, v, mirrored)
            assert r.found and r.witness == (1, 2, 3, 4)
            assert r.detail.startswith(f"p4-{v}")


def test_variant_of():
    for v in P4_VARIANTS:
        assert p4_variant_of(p4_pattern(v)) == (v, False)
        assert p4_variant_of(mirror_pattern(p4_pattern(v))) in {(v, True), (v, False)}
    assert p4_variant_of(Pattern(4, [(1, 2), (2, 3), (3, 4), (1, 4)])) is None
    assert p4_variant_of(Pattern(3, [(1, 2), (2, 3)])) is None


def test_matches_oracle():
    for idx, G in enumerate(random_graphs(200, 11, seed=44)):
        for v in P4_VARIANTS:
            for mirrored in (False, True):
                P = p4_pattern(v, mirrored)
                r = detect_positive_p4(G, v, mirrored)
                assert r.found == brute_detect(G, P).found
                if r.found:
                    assert is_realization(G, r.witness, P)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=12))
def test_scan_budget(G):
    for v in P4_VARIANTS:
        c = ScanCounter()
        detect_positive_p4(G, v, counter=c)
        assert c.count <= SCAN_CONSTANT * (G.n + G.m)


def test_edge_tables():
    T = build_edge_tables(OrderedGraph(5, [(1, 2), (1, 4), (1, 5), (3, 4)]))
    assert T.e_plus[(1, 4)] == 5 and T.e_minus[(1, 4)] == 2
    assert T.plus_e[(3, 4)] is None and T.minus_e[(3, 4)] == 1
    assert T.max_succ[1] == 5 and T.min_pred[4] == 1


def test_bad_variant():
    with pytest.raises(ValueError):
        detect_positive_p4(OrderedGraph(4), 0)
    assert set(PHI_TEXT) == set(P4_VARIANTS)
