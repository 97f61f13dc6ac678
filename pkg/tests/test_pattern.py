import pytest

from orderedpatterns.pattern import (
    CANONICAL_IDS,
    CATALOG,
    P4_VARIANTS,
    Pattern,
    PatternParseError,
    canonical_representative,
    canonicalize3,
    catalog_id,
    catalog_pattern,
    classify,
    complement_pattern,
    crossings,
    flat_cycle,
    mirror_pattern,
    named_pattern,
    parse_pattern,
    pattern_display_name,
    pattern_names,
    pf_pattern,
    p4_pattern,
    render_pattern,
)


def test_catalog_is_every_three_vertex_pattern():
    assert len(CATALOG) == 27
    assert len({(e.mandatory, e.forbidden) for e in CATALOG}) == 27
    assert [e.id for e in CATALOG] == list(range(27))


def test_canonical_ids_cover_the_mirror_classes():
    assert len(CANONICAL_IDS) == 18
    classes = {frozenset({i, catalog_id(mirror_pattern(CATALOG[i].pattern))}) for i in range(27)}
    assert len(classes) == 18
    assert all(len(c & CANONICAL_IDS) == 1 for c in classes)
    for i in range(27):
        assert canonical_representative(i) in CANONICAL_IDS


def test_canonicalize3_flags_mirrors():
    cid, mirrored = canonicalize3(catalog_pattern("chordal"))
    assert (cid, mirrored) == (4, False)
    cid, mirrored = canonicalize3(catalog_pattern("mirror-chordal"))
    assert mirrored and cid == 1


def test_pattern_normalizes_and_validates():
    P = Pattern(3, [(2, 1), (1, 2)], [(3, 2)])
    assert P.mandatory == ((1, 2),) and P.forbidden == ((2, 3),)
    assert P.kind(2, 1) == "M" and P.kind(1, 3) == "U"
    assert P.undecided == ((1, 3),)
    with pytest.raises(ValueError):
        Pattern(3, [(1, 2)], [(1, 2)])
    with pytest.raises(ValueError):
        Pattern(3, [(1, 4)])
    with pytest.raises(ValueError):
        Pattern(0)


def test_mirror_and_complement():
    P = Pattern(4, [(1, 2)], [(2, 4)])
    assert mirror_pattern(P) == Pattern(4, [(3, 4)], [(1, 3)])
    assert complement_pattern(P) == Pattern(4, [(2, 4)], [(1, 2)])
    assert mirror_pattern(mirror_pattern(P)) == P


def test_parse_and_render():
    P = parse_pattern("# comment\n3\n1 3 M\n1 2 F\n")
    assert P == Pattern(3, [(1, 3)], [(1, 2)])
    assert parse_pattern(render_pattern(P)) == P


@pytest.mark.parametrize(
    "text, line",
    [("", 1), ("x\n", 1), ("3\n1 2\n", 2), ("3\n1 2 Q\n", 2), ("3\n2 1 M\n", 2), ("3\n1 2 M\n1 2 F\n", 3)],
)
def test_parse_errors(text, line):
    with pytest.raises(PatternParseError) as info:
        parse_pattern(text)
    assert info.value.line == line


def test_crossings_and_classify():
    assert crossings([(1, 3), (2, 4)]) == 1
    assert crossings([(1, 4), (2, 3)]) == 0
    c = classify(flat_cycle(5))
    assert c.positive and c.outerplanar and not c.forest and not c.fully_specified
    c = classify(pf_pattern("ab"))
    assert c.crossings == 1 and not c.positive


def test_named_patterns():
    assert named_pattern("chordal") == catalog_pattern(4)
    assert named_pattern("p-empty") == Pattern(4, [(1, 3), (2, 4)])
    assert named_pattern("p-ab") == Pattern(4, [(1, 3), (2, 4)], [(1, 2), (2, 3)])
    assert named_pattern("p4-2-mirrored") == mirror_pattern(p4_pattern(2))
    assert named_pattern("flat-cycle-4") == Pattern(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    with pytest.raises(ValueError, match="unknown pattern name"):
        named_pattern("nonsense")
    assert "p4-8-mirrored" in pattern_names()


def test_p4_variants_are_paths_with_twelve_distinct_orderings():
    pats = {p4_pattern(v, m) for v in P4_VARIANTS for m in (False, True)}
    assert len(pats) == 12
    for P in pats:
        c = classify(P)
        assert c.forest and len(P.mandatory) == 3 and max(_degrees(P).values()) == 2
    with pytest.raises(ValueError):
        p4_pattern(9)


def _degrees(P):
    d = {}
    for a, b in P.mandatory:
        d[a] = d.get(a, 0) + 1
        d[b] = d.get(b, 0) + 1
    return d


def test_display_names():
    assert pattern_display_name(catalog_pattern(4)) == "Chordal"
    assert pattern_display_name(pf_pattern("")) == "p-empty"
    assert pattern_display_name(p4_pattern(3, True)) == "p4-3-mirrored"
    assert pattern_display_name(Pattern(5, [(1, 5)])) is None
