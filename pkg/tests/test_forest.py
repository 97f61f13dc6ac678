import math

import pytest
from hypothesis import given, settings

from conftest import random_graphs
from test_graph import graphs
from orderedpatterns.forest import (
    BoundaryEngine,
    ForestPreconditionError,
    analyze_nesting,
    compute_boundaries,
    detect_forest,
    is_positive_outerplanar_forest,
)
from orderedpatterns.graph import OrderedGraph, is_realization
from orderedpatterns.oracle import brute_detect, iter_realizations
from orderedpatterns.pattern import Pattern, flat_cycle, p4_pattern

# k = 10 with reference edge (1, 10): three edges hang off 1, two sit in the
# middle and two hang off 10
NESTED = Pattern(10, [(1, 10), (1, 3), (3, 4), (2, 3), (5, 6), (6, 7), (8, 10), (9, 10)])


def test_nesting_classes():
    a = analyze_nesting(NESTED)
    assert a.lome == (1, 10) and a.rome == (1, 10)
    assert a.lome_classes == {
        (1, 3): "left", (3, 4): "left", (2, 3): "left",
        (5, 6): "centered", (6, 7): "centered",
        (8, 10): "right", (9, 10): "right",
    }
    assert a.relation[((1, 3), (5, 6))] == "side-by-side"
    assert a.relation[((1, 10), (5, 6))] == "nested"


def test_preconditions():
    assert is_positive_outerplanar_forest(p4_pattern(1))
    assert not is_positive_outerplanar_forest(flat_cycle(4))
    assert not is_positive_outerplanar_forest(Pattern(4, [(1, 3), (2, 4)]))
    assert not is_positive_outerplanar_forest(Pattern(3, [(1, 2)], [(2, 3)]))
    with pytest.raises(ForestPreconditionError):
        detect_forest(OrderedGraph(4), flat_cycle(4))


def test_nested_pattern_on_itself():
    G = OrderedGraph(10, NESTED.mandatory)
    r = detect_forest(G, NESTED)
    assert r.found and r.witness == tuple(range(1, 11))
    H = OrderedGraph(10, [e for e in NESTED.mandatory if e != (6, 7)])
    assert not detect_forest(H, NESTED).found


def test_matches_oracle_with_shared_engine():
    pats = [p4_pattern(v) for v in range(1, 9) if is_positive_outerplanar_forest(p4_pattern(v))]
    pats += [Pattern(5, [(1, 5), (2, 3), (4, 5)]), Pattern(5, [(1, 2), (3, 5)])]
    for G in random_graphs(150, 12, seed=21):
        eng = BoundaryEngine(G)
        for P in pats:
            r = detect_forest(G, P, eng)
            assert r.found == brute_detect(G, P).found
            if r.found:
                assert is_realization(G, r.witness, P)


def test_engine_is_bound_to_its_graph():
    eng = BoundaryEngine(OrderedGraph(3))
    with pytest.raises(ValueError):
        detect_forest(OrderedGraph(3), Pattern(2, [(1, 2)]), eng)


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=9))
def test_boundary_arrays_are_extremal(G):
    P = Pattern(4, [(1, 3), (2, 3), (3, 4)])
    fwd = compute_boundaries(P, G, "forward")
    bwd = compute_boundaries(P, G, "backward")
    lo = [math.inf] * (G.n + 2)
    hi = [-math.inf] * (G.n + 2)
    for X in iter_realizations(G, P):
        lo[X[0]] = min(lo[X[0]], X[-1])
        hi[X[-1]] = max(hi[X[-1]], X[0])
    for u in range(1, G.n + 1):
        assert fwd.m[u] == lo[u]
        assert bwd.m[u] == hi[u]
        assert fwd.M[u] == min(lo[u + 1 : G.n + 1], default=math.inf)
        assert bwd.M[u] == max(hi[1:u], default=-math.inf)


def test_bad_direction():
    with pytest.raises(ValueError):
        compute_boundaries(Pattern(2, [(1, 2)]), OrderedGraph(2), "sideways")
