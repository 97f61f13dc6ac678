"""Patterns over ``k`` ordered vertices, the three-vertex catalog and structural classifiers.

Every pair ``(a, b)`` with ``a < b`` of a pattern is mandatory (must be an
edge), forbidden (must be a non-edge) or undecided.  Only the decided pairs
are stored.
"""

from __future__ import annotations

import io
import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

__all__ = [
    "Pattern",
    "PatternClass",
    "PatternParseError",
    "CatalogEntry",
    "CATALOG",
    "CANONICAL_IDS",
    "parse_pattern",
    "render_pattern",
    "complement_pattern",
    "mirror_pattern",
    "canonicalize3",
    "catalog_pattern",
    "classify",
    "crossings",
    "flat_cycle",
    "p4_pattern",
    "pf_pattern",
    "named_pattern",
    "pattern_names",
]

Pair = tuple


@dataclass(frozen=True)
class Pattern:
    """A pattern on vertices ``1..k``.

    ``mandatory`` and ``forbidden`` hold sorted tuples of pairs ``(a, b)``
    with ``a < b``.  Pairs in neither are undecided.
    """

    k: int
    mandatory: tuple = ()
    forbidden: tuple = ()

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("a pattern needs at least one vertex")
        m = tuple(sorted(set(map(_norm_pair, self.mandatory))))
        f = tuple(sorted(set(map(_norm_pair, self.forbidden))))
        for a, b in m + f:
            if a < 1 or b > self.k:
                raise ValueError(f"pair ({a}, {b}) out of range 1..{self.k}")
        if set(m) & set(f):
            raise ValueError("a pair cannot be both mandatory and forbidden")
        object.__setattr__(self, "mandatory", m)
        object.__setattr__(self, "forbidden", f)

    def kind(self, a: int, b: int) -> str:
        """``'M'``, ``'F'`` or ``'U'`` for the pair ``{a, b}``."""
        p = _norm_pair((a, b))
        if p in self.mandatory:
            return "M"
        if p in self.forbidden:
            return "F"
        return "U"

    @property
    def decided(self) -> tuple:
        """All decided pairs with their kind, sorted by pair."""
        return tuple(sorted([(p, "M") for p in self.mandatory] + [(p, "F") for p in self.forbidden]))

    @property
    def undecided(self) -> tuple:
        d = set(self.mandatory) | set(self.forbidden)
        return tuple(p for p in itertools.combinations(range(1, self.k + 1), 2) if p not in d)

    def __str__(self) -> str:
        return render_pattern(self).strip().replace("\n", "; ")


def _norm_pair(p) -> Pair:
    a, b = p
    if a == b:
        raise ValueError(f"pattern pair ({a}, {b}) is a loop")
    return (a, b) if a < b else (b, a)


class PatternParseError(ValueError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"pattern parse error at line {line}: {message}")


def parse_pattern(source) -> Pattern:
    """Parse the pattern format: a header ``k`` then lines ``a b M`` or ``a b F``.

    >>> parse_pattern("3\\n1 3 M\\n1 2 F\\n")
    Pattern(k=3, mandatory=((1, 3),), forbidden=((1, 2),))
    """
    if isinstance(source, (bytes, bytearray)):
        source = source.decode("utf-8")
    elif not isinstance(source, str):
        source = source.read()
        if isinstance(source, (bytes, bytearray)):
            source = source.decode("utf-8")
    k = None
    classes: dict = {}
    for lineno, raw in enumerate(io.StringIO(source), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if k is None:
            if len(toks) != 1 or not toks[0].isdigit() or int(toks[0]) < 1:
                raise PatternParseError(lineno, "header must be a positive integer k")
            k = int(toks[0])
            continue
        if len(toks) != 3 or toks[2] not in ("M", "F"):
            raise PatternParseError(lineno, "pair line must be 'a b M' or 'a b F'")
        try:
            a, b = int(toks[0]), int(toks[1])
        except ValueError:
            raise PatternParseError(lineno, "pair endpoints must be integers") from None
        if not (1 <= a < b <= k):
            raise PatternParseError(lineno, f"pair ({a}, {b}) must satisfy 1 <= a < b <= {k}")
        if (a, b) in classes and classes[(a, b)] != toks[2]:
            raise PatternParseError(lineno, f"pair ({a}, {b}) listed with conflicting classes")
        classes[(a, b)] = toks[2]
    if k is None:
        raise PatternParseError(1, "missing header k")
    return Pattern(
        k,
        tuple(p for p, c in classes.items() if c == "M"),
        tuple(p for p, c in classes.items() if c == "F"),
    )


def render_pattern(P: Pattern) -> str:
    lines = [str(P.k)] + [f"{a} {b} {c}" for (a, b), c in P.decided]
    return "\n".join(lines) + "\n"


def complement_pattern(P: Pattern) -> Pattern:
    """Swap mandatory and forbidden pairs."""
    return Pattern(P.k, P.forbidden, P.mandatory)


def mirror_pattern(P: Pattern) -> Pattern:
    """Reverse the vertex order: pair ``(a, b)`` moves to ``(k+1-b, k+1-a)``."""
    k = P.k

    def flip(pairs):
        return tuple((k + 1 - b, k + 1 - a) for a, b in pairs)

    return Pattern(k, flip(P.mandatory), flip(P.forbidden))


# --- three-vertex catalog -------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    id: int
    name: str
    mandatory: tuple
    forbidden: tuple

    @property
    def slug(self) -> str:
        return _slug(self.name)

    @property
    def pattern(self) -> Pattern:
        return Pattern(3, self.mandatory, self.forbidden)


def _slug(name: str) -> str:
    return name.split("=")[0].strip().lower().replace(" ", "-")


_A, _B, _C = (1, 2), (1, 3), (2, 3)

CATALOG: tuple = tuple(
    CatalogEntry(i, name, m, f)
    for i, (name, m, f) in enumerate(
        [
            ("Triangle", (_A, _B, _C), ()),
            ("mirror-Chordal", (_A, _B), (_C,)),
            ("Comparability", (_A, _C), (_B,)),
            ("co-Chordal", (_A,), (_B, _C)),
            ("Chordal", (_B, _C), (_A,)),
            ("co-Comparability", (_B,), (_A, _C)),
            ("mirror-co-Chordal", (_C,), (_A, _B)),
            ("co-Triangle", (), (_A, _B, _C)),
            ("Forest", (_B, _C), ()),
            ("mirror-Interval", (_B,), (_C,)),
            ("mirror-co-Interval", (_C,), (_B,)),
            ("co-Forest", (), (_B, _C)),
            ("Bipartite", (_A, _C), ()),
            ("Split", (_A,), (_C,)),
            ("mirror-Split=co-Split", (_C,), (_A,)),
            ("co-Bipartite", (), (_A, _C)),
            ("mirror-Forest", (_A, _B), ()),
            ("co-Interval", (_A,), (_B,)),
            ("Interval", (_B,), (_A,)),
            ("mirror-co-Forest", (), (_A, _B)),
            ("mirror-Star", (_C,), ()),
            ("mirror-co-Star", (), (_C,)),
            ("Linear Forest", (_B,), ()),
            ("co-Linear Forest", (), (_B,)),
            ("Star", (_A,), ()),
            ("co-Star", (), (_A,)),
            ("No Graph", (), ()),
        ]
    )
)

# Representatives of the 18 classes up to mirroring.
CANONICAL_IDS = frozenset({0, 2, 3, 4, 5, 7, 8, 11, 12, 13, 15, 17, 18, 22, 23, 24, 25, 26})

_CATALOG_INDEX = {(e.mandatory, e.forbidden): e.id for e in CATALOG}


def catalog_pattern(ident) -> Pattern:
    """Catalog pattern by id or by (case-insensitive) name."""
    if isinstance(ident, int):
        return CATALOG[ident].pattern
    key = _slug(ident)
    for e in CATALOG:
        if e.slug == key or _slug(e.name.split("=")[-1]) == key:
            return e.pattern
    raise KeyError(f"unknown three-vertex pattern {ident!r}")


def catalog_id(P: Pattern) -> int:
    if P.k != 3:
        raise ValueError("catalog lookup needs a three-vertex pattern")
    return _CATALOG_INDEX[(P.mandatory, P.forbidden)]


def canonicalize3(P: Pattern) -> tuple:
    """Return ``(catalog_id, mirrored)``.

    ``mirrored`` is true when the pattern is not one of the 18 canonical
    representatives, so reaching one requires mirroring.

    >>> canonicalize3(Pattern(3, [(1, 3), (2, 3)], [(1, 2)]))
    (4, False)
    """
    cid = catalog_id(P)
    return cid, cid not in CANONICAL_IDS


def canonical_representative(cid: int) -> int:
    """Catalog id of the canonical pattern in the mirror class of ``cid``."""
    if cid in CANONICAL_IDS:
        return cid
    return catalog_id(mirror_pattern(CATALOG[cid].pattern))


# --- classification --------------------------------------------------------

@dataclass(frozen=True)
class PatternClass:
    positive: bool
    fully_specified: bool
    decided_edges: tuple
    crossings: int
    outerplanar: bool
    forest: bool


def crossings(edges: Iterable[Pair]) -> int:
    """Number of crossing pairs ``i < i' < j < j'`` among the given edges."""
    es = list(edges)
    c = 0
    for (i, j), (x, y) in itertools.combinations(es, 2):
        if i < x < j < y or x < i < y < j:
            c += 1
    return c


def _acyclic(k: int, edges) -> bool:
    parent = list(range(k + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def classify(P: Pattern) -> PatternClass:
    decided = tuple(sorted(P.mandatory + P.forbidden))
    c = crossings(decided)
    return PatternClass(
        positive=not P.forbidden,
        fully_specified=len(decided) == P.k * (P.k - 1) // 2,
        decided_edges=decided,
        crossings=c,
        outerplanar=c == 0,
        forest=_acyclic(P.k, decided),
    )


# --- named families --------------------------------------------------------

def flat_cycle(k: int) -> Pattern:
    """The path ``1-2-...-k`` closed by the edge ``(1, k)``."""
    if k < 3:
        raise ValueError("a flat cycle needs at least three vertices")
    return Pattern(k, [(i, i + 1) for i in range(1, k)] + [(1, k)])


P4_VARIANTS = {
    1: ((1, 2), (2, 3), (3, 4)),
    2: ((1, 2), (2, 3), (1, 4)),
    3: ((1, 2), (3, 4), (1, 3)),
    4: ((2, 3), (2, 4), (1, 3)),
    5: ((1, 2), (3, 4), (1, 4)),
    6: ((1, 4), (1, 3), (2, 3)),
    7: ((1, 2), (2, 4), (1, 3)),
    8: ((1, 4), (1, 3), (2, 4)),
}


def p4_pattern(variant: int, mirrored: bool = False) -> Pattern:
    """The positive four-vertex pattern whose mandatory edges form the given path ordering."""
    if variant not in P4_VARIANTS:
        raise ValueError(f"P4 variant must be in 1..8, got {variant}")
    P = Pattern(4, P4_VARIANTS[variant])
    return mirror_pattern(P) if mirrored else P


PF_LETTERS = {"a": (1, 2), "b": (2, 3), "c": (3, 4), "d": (1, 4)}


def pf_pattern(letters: str) -> Pattern:
    """Mandatory ``(1,3)`` and ``(2,4)``; each letter of ``letters`` adds a forbidden pair."""
    bad = set(letters) - set(PF_LETTERS)
    if bad:
        raise ValueError(f"unknown letters {sorted(bad)}; use a subset of 'abcd'")
    return Pattern(4, [(1, 3), (2, 4)], [PF_LETTERS[c] for c in sorted(set(letters))])


def named_pattern(name: str) -> Pattern:
    """Resolve a CLI pattern name.

    Accepted: the three-vertex catalog names (``chordal``,
    ``co-interval``, ``mirror-split``...), ``p-empty``, ``p-a``, ``p-b``,
    ``p-c``, ``p-ab``, ``p-bc`` and other ``p-<letters>``,
    ``p4-<variant>`` optionally suffixed ``-mirrored``, and
    ``flat-cycle-<k>``.
    """
    key = name.strip().lower()
    if key == "p-empty":
        return pf_pattern("")
    if key.startswith("p4-"):
        rest = key[3:]
        mirrored = rest.endswith("-mirrored")
        if mirrored:
            rest = rest[: -len("-mirrored")]
        if rest.isdigit():
            return p4_pattern(int(rest), mirrored)
    elif key.startswith("p-"):
        return pf_pattern(key[2:])
    elif key.startswith("flat-cycle-") and key[11:].isdigit():
        return flat_cycle(int(key[11:]))
    try:
        return catalog_pattern(key)
    except KeyError:
        raise ValueError(f"unknown pattern name {name!r}; known: {', '.join(pattern_names())}") from None


def pattern_names() -> list:
    names = [e.slug for e in CATALOG] + ["co-split"]
    names += ["p-empty", "p-a", "p-b", "p-c", "p-ab", "p-bc"]
    names += [f"p4-{v}" for v in P4_VARIANTS] + [f"p4-{v}-mirrored" for v in P4_VARIANTS]
    names += ["flat-cycle-<k>"]
    return names


def pattern_display_name(P: Pattern) -> Optional[str]:
    """A human name for well-known patterns, else ``None``."""
    if P.k == 3:
        return CATALOG[catalog_id(P)].name
    if P.k == 4:
        for v in P4_VARIANTS:
            for mir in (False, True):
                if p4_pattern(v, mir) == P:
                    return f"p4-{v}" + ("-mirrored" if mir else "")
        if set(P.mandatory) == {(1, 3), (2, 4)}:
            inv = {p: c for c, p in PF_LETTERS.items()}
            if all(p in inv for p in P.forbidden):
                letters = "".join(sorted(inv[p] for p in P.forbidden))
                return "p-" + (letters or "empty")
    if P.k >= 3 and not P.forbidden and P == flat_cycle(P.k):
        return f"flat-cycle-{P.k}"
    return None
