import random

import pytest

from conftest import random_graphs
from orderedpatterns.graph import OrderedGraph, is_realization
from orderedpatterns.merge import (
    Leaf,
    Merge,
    MergeTree,
    NotOuterplanarError,
    VertexCreate,
    build_bounded_tree,
    build_outerplanar_tree,
    dist_out,
    dump_tree,
    exact_merge_width,
    merge_width_report,
    parse_tree,
    run_dp,
    validate_merge_tree,
)
from orderedpatterns.oracle import brute_detect
from orderedpatterns.pattern import Pattern, flat_cycle, pf_pattern
from orderedpatterns.report import EngineError


def test_outerplanar_tree_width_two():
    for P in (flat_cycle(6), Pattern(5, [(1, 5), (2, 4)], [(1, 2), (4, 5)]), Pattern(4)):
        T = build_outerplanar_tree(P)
        assert T.width <= 2
        assert validate_merge_tree(T, P).ok


def test_outerplanar_rejects_crossings():
    with pytest.raises(NotOuterplanarError):
        build_outerplanar_tree(pf_pattern(""))


def test_dist_out():
    assert dist_out(flat_cycle(5)) == (0, ())
    d, removed = dist_out(Pattern(4, [(1, 3), (2, 4)], [(1, 2)]))
    assert d == 1 and removed == ((1, 3),)


def test_bounded_tree_respects_bound():
    rng = random.Random(9)
    for _ in range(60):
        k = rng.randint(2, 6)
        pairs = [(a, b) for a in range(1, k + 1) for b in range(a + 1, k + 1)]
        m = [p for p in pairs if rng.random() < 0.4]
        f = [p for p in pairs if p not in m and rng.random() < 0.3]
        P = Pattern(k, m, f)
        T = build_bounded_tree(P)
        assert validate_merge_tree(T, P).ok
        assert T.width <= 2 * dist_out(P)[0] + 2


@pytest.mark.parametrize(
    "P, width",
    [(pf_pattern(""), 2), (pf_pattern("a"), 2), (pf_pattern("ab"), 2), (pf_pattern("abcd"), 3)],
    ids=["p-empty", "p-a", "p-ab", "p-abcd"],
)
def test_exact_widths(P, width):
    w, T = exact_merge_width(P)
    assert w == width
    assert validate_merge_tree(T, P).ok and T.width == w
    assert merge_width_report(P, exact=True).exact == width


def test_exact_trees_drive_the_dp():
    _, T = exact_merge_width(pf_pattern("abcd"))
    P = pf_pattern("abcd")
    for G in random_graphs(100, 9, seed=77):
        assert run_dp(G, T, target=P).found == brute_detect(G, P).found


def test_validation_catches_bad_trees():
    P = Pattern(3, [(1, 2), (2, 3)])
    bad = MergeTree(Merge(Leaf(1, 2, "M", {2}), Leaf(2, 3, "M", {3}), ()))
    v = validate_merge_tree(bad, P)
    assert not v.ok and v.problems
    wrong_root = MergeTree(Leaf(1, 2, "M"))
    assert not validate_merge_tree(wrong_root, P).ok


def test_dump_parse_round_trip():
    P = Pattern(5, [(1, 3), (2, 5)], [(1, 5), (3, 4)])
    T = build_bounded_tree(P)
    text = dump_tree(T)
    assert dump_tree(parse_tree(text)) == text
    assert validate_merge_tree(parse_tree(text), P).ok
    single = MergeTree(VertexCreate(None, 1, {1}))
    assert dump_tree(parse_tree(dump_tree(single))) == dump_tree(single)


def test_dp_matches_oracle_and_witnesses():
    pats = [flat_cycle(5), pf_pattern("b"), Pattern(5, [(1, 4), (2, 5), (3, 5)], [(1, 2)]), Pattern(4, [], [(1, 4)])]
    for G in random_graphs(80, 12, seed=88):
        for P in pats:
            r = run_dp(G, build_bounded_tree(P), target=P)
            assert r.found == brute_detect(G, P).found
            if r.found:
                assert is_realization(G, r.witness, P)


def test_dp_caps():
    P = Pattern(6, [(a, b) for a in range(1, 7) for b in range(a + 1, 7) if (a + b) % 2])
    T = build_bounded_tree(P)
    with pytest.raises(EngineError):
        run_dp(OrderedGraph(30), T, width_cap=1)
