import itertools

from conftest import random_graphs
from orderedpatterns.clique import detect_via_clique, find_layered_clique, reduce_to_clique
from orderedpatterns.graph import OrderedGraph, is_realization, parse_ordered_graph
from orderedpatterns.oracle import brute_detect
from orderedpatterns.pattern import Pattern, flat_cycle


def test_ids_decode():
    LG = reduce_to_clique(OrderedGraph(5, [(1, 2)]), Pattern(3))
    assert LG.vertex_id(4, 2) == 9
    assert LG.decode(9) == (4, 2)
    assert LG.origin(9) == 4 and LG.layer(9) == 2


def test_layer_adjacency_respects_order_and_kind():
    G = OrderedGraph(4, [(1, 3), (2, 4)])
    LG = reduce_to_clique(G, Pattern(3, [(1, 2)], [(2, 3)]))
    assert LG.adjacent(1, 1, 3, 2)
    assert not LG.adjacent(1, 1, 2, 2)  # mandatory pair, non-edge
    assert not LG.adjacent(3, 1, 1, 2)  # wrong order
    assert LG.adjacent(3, 2, 4, 3) and not LG.adjacent(2, 2, 4, 3)
    assert LG.adjacent(1, 1, 4, 3)  # undecided
    assert not LG.adjacent(1, 1, 3, 1)


def test_render_is_a_parsable_graph():
    LG = reduce_to_clique(OrderedGraph(4, [(1, 2), (3, 4)]), Pattern(2, [(1, 2)]))
    H = parse_ordered_graph(LG.render())
    assert H.n == 8 and H.edge_set == {(1, 6), (3, 8)}


def test_matches_oracle():
    pats = [flat_cycle(4), Pattern(4, [(1, 4)], [(2, 3), (1, 2)]), Pattern(5, [(1, 5), (2, 3)], [(3, 4)])]
    for G in random_graphs(80, 9, seed=17):
        for P in pats:
            r = detect_via_clique(G, P)
            assert r.found == brute_detect(G, P).found
            if r.found:
                assert is_realization(G, r.witness, P)


def test_small_cases():
    assert find_layered_clique(reduce_to_clique(OrderedGraph(2), Pattern(3))) is None
    assert detect_via_clique(OrderedGraph(3), Pattern(3)).witness == (1, 2, 3)
    tri = list(itertools.combinations(range(1, 4), 2))
    assert detect_via_clique(OrderedGraph(3, tri), Pattern(3, tri)).witness == (1, 2, 3)
