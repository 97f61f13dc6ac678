import itertools

import pytest

from conftest import random_graphs
from orderedpatterns.graph import OrderedGraph, is_realization
from orderedpatterns.oracle import (
    OracleCapError,
    brute_detect,
    brute_detect_family,
    induced_masks,
    iter_realizations,
    mask_verdict,
)
from orderedpatterns.pattern import Pattern, catalog_pattern, flat_cycle


def test_first_realization_is_lexicographic():
    G = OrderedGraph(5, [(1, 3), (2, 4), (3, 5)])
    P = Pattern(2, [(1, 2)])
    assert list(iter_realizations(G, P)) == [(1, 3), (2, 4), (3, 5)]
    assert brute_detect(G, P).witness == (1, 3)


def test_realizations_match_a_plain_filter():
    for G in random_graphs(40, 8, seed=3):
        for P in (catalog_pattern("chordal"), flat_cycle(4), Pattern(4, [(1, 4)], [(2, 3)])):
            want = [X for X in itertools.combinations(range(1, G.n + 1), P.k) if is_realization(G, X, P)]
            assert list(iter_realizations(G, P)) == want


def test_cap():
    G = OrderedGraph(10, [])
    with pytest.raises(OracleCapError):
        brute_detect(G, Pattern(9))
    assert brute_detect(G, Pattern(9), override=True).found


def test_pattern_larger_than_graph():
    assert not brute_detect(OrderedGraph(2, [(1, 2)]), Pattern(3)).found


def test_family_reports_member():
    G = OrderedGraph(3, [(1, 2)])
    r = brute_detect_family(G, [catalog_pattern("triangle"), catalog_pattern("star")])
    assert r.found and r.detail == "member 1"
    assert not brute_detect_family(G, [catalog_pattern("triangle")]).found


def test_masks_agree_with_enumeration():
    for G in random_graphs(30, 7, seed=5):
        for k in (1, 2, 3, 4):
            masks = induced_masks(G, k)
            for P in (Pattern(k), flat_cycle(k) if k >= 3 else Pattern(k, [(1, k)] if k > 1 else [])):
                assert mask_verdict(masks, P) == brute_detect(G, P).found
