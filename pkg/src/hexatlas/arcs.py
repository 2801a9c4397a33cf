"""Arc classes on the hexagon and the 14 arc triples.

The boundary edges are labelled in cyclic order ``a, C, b, A, c, B`` (indices
0..5).  An essential arc joins two non-adjacent edges, so there are nine
classes: six *corner* arcs, each cutting off one side, and three *spanning*
arcs joining a side to the opposite one.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import NotAdmissible

__all__ = [
    "Edge",
    "ArcClass",
    "ArcTriple",
    "ARCS",
    "CORNER_ARCS",
    "SPANNING_ARCS",
    "edge_pair",
    "crosses",
    "compatible_triples",
    "triple_case",
    "parse_arc",
    "parse_triple",
    "rotate",
]


class Edge(enum.IntEnum):
    a = 0
    C = 1
    b = 2
    A = 3
    c = 4
    B = 5

    def adjacent(self, other: "Edge") -> bool:
        return (self - other) % 6 in (1, 5)


def _corner(side: Edge) -> frozenset:
    return frozenset({Edge((side - 1) % 6), Edge((side + 1) % 6)})


class ArcClass(enum.Enum):
    """One of the nine homotopy classes of essential arcs.

    Member names are the serialized (ASCII) names.  The canonical order sorts
    names case-insensitively with a lowercase name before its uppercase twin:
    ``a, A, alpha, b, B, beta, c, C, gamma``.
    """

    a = "a"
    A = "A"
    alpha = "alpha"
    b = "b"
    B = "B"
    beta = "beta"
    c = "c"
    C = "C"
    gamma = "gamma"

    @property
    def label(self) -> str:
        return self.value

    @property
    def rank(self) -> int:
        return _RANK[self]

    @property
    def is_spanning(self) -> bool:
        return self in SPANNING_ARCS

    @property
    def edge_pair(self) -> frozenset:
        return _EDGE_PAIRS[self]

    def __lt__(self, other: "ArcClass") -> bool:
        if not isinstance(other, ArcClass):
            return NotImplemented
        return self.rank < other.rank

    def __repr__(self) -> str:
        return f"ArcClass.{self.name}"

    def __str__(self) -> str:
        return self.value


ARCS: tuple = tuple(ArcClass)
_RANK = {arc: i for i, arc in enumerate(ARCS)}
CORNER_ARCS = frozenset({ArcClass.a, ArcClass.b, ArcClass.c, ArcClass.A, ArcClass.B, ArcClass.C})
SPANNING_ARCS = frozenset({ArcClass.alpha, ArcClass.beta, ArcClass.gamma})

_EDGE_PAIRS = {
    ArcClass.a: _corner(Edge.a),
    ArcClass.b: _corner(Edge.b),
    ArcClass.c: _corner(Edge.c),
    ArcClass.A: _corner(Edge.A),
    ArcClass.B: _corner(Edge.B),
    ArcClass.C: _corner(Edge.C),
    ArcClass.alpha: frozenset({Edge.a, Edge.A}),
    ArcClass.beta: frozenset({Edge.b, Edge.B}),
    ArcClass.gamma: frozenset({Edge.c, Edge.C}),
}

# Greek spellings are accepted on input only.
_ALIASES = {"α": "alpha", "β": "beta", "γ": "gamma"}

# a -> b -> c -> a, A -> B -> C -> A, alpha -> beta -> gamma -> alpha:
# rotates the hexagon by two edges.
_ROTATION = {
    ArcClass.a: ArcClass.b, ArcClass.b: ArcClass.c, ArcClass.c: ArcClass.a,
    ArcClass.A: ArcClass.B, ArcClass.B: ArcClass.C, ArcClass.C: ArcClass.A,
    ArcClass.alpha: ArcClass.beta, ArcClass.beta: ArcClass.gamma,
    ArcClass.gamma: ArcClass.alpha,
}

# lowercase <-> uppercase; rotates the hexagon by three edges.
_SWAP_CASE = {
    ArcClass.a: ArcClass.A, ArcClass.A: ArcClass.a,
    ArcClass.b: ArcClass.B, ArcClass.B: ArcClass.b,
    ArcClass.c: ArcClass.C, ArcClass.C: ArcClass.c,
    ArcClass.alpha: ArcClass.alpha, ArcClass.beta: ArcClass.beta,
    ArcClass.gamma: ArcClass.gamma,
}


def rotate(arc: ArcClass, times: int = 1) -> ArcClass:
    for _ in range(times % 3):
        arc = _ROTATION[arc]
    return arc


def swap_case(arc: ArcClass) -> ArcClass:
    return _SWAP_CASE[arc]


def parse_arc(name) -> ArcClass:
    if isinstance(name, ArcClass):
        return name
    key = _ALIASES.get(str(name).strip(), str(name).strip())
    try:
        return ArcClass(key)
    except ValueError:
        raise NotAdmissible(f"unknown arc class {name!r}") from None


def edge_pair(arc: ArcClass) -> frozenset:
    """Return the two (non-adjacent) boundary edges joined by ``arc``."""
    return parse_arc(arc).edge_pair


def _interleave(p: frozenset, q: frozenset) -> bool:
    if p & q:
        return False
    lo, hi = sorted(p)
    inside = [lo < e < hi for e in q]
    return inside[0] != inside[1]


@lru_cache(maxsize=None)
def _crosses(c1: ArcClass, c2: ArcClass) -> int:
    return int(_interleave(c1.edge_pair, c2.edge_pair))


def crosses(c1, c2) -> int:
    """Geometric intersection number (0 or 1) of two arc classes.

    Two chords of the disk meet essentially iff their endpoint edges strictly
    interleave around the boundary; chords sharing an edge can always be
    pulled apart along that edge.
    """
    return _crosses(parse_arc(c1), parse_arc(c2))


def _case_of(classes: tuple) -> int:
    spanning = [x for x in classes if x.is_spanning]
    if not spanning:
        return 1
    u, v = (x for x in classes if not x.is_spanning)
    return 3 if swap_case(u) is v else 2


@dataclass(frozen=True)
class ArcTriple:
    """Three pairwise disjoint arc classes, stored in canonical order."""

    classes: tuple

    def __post_init__(self):
        classes = tuple(sorted({parse_arc(x) for x in self.classes}))
        if len(classes) != 3:
            raise NotAdmissible(f"an arc triple needs three distinct classes, got {self.classes!r}")
        for x, y in itertools.combinations(classes, 2):
            if crosses(x, y):
                raise NotAdmissible(f"{x} and {y} cross; {'/'.join(map(str, classes))} is not an arc triple")
        object.__setattr__(self, "classes", classes)

    @classmethod
    def of(cls, *names) -> "ArcTriple":
        if len(names) == 1 and not isinstance(names[0], (str, ArcClass)):
            names = tuple(names[0])
        return cls(tuple(names))

    @property
    def case(self) -> int:
        return _case_of(self.classes)

    @property
    def names(self) -> list:
        return [x.value for x in self.classes]

    def sort_key(self) -> tuple:
        return (self.case, tuple(x.rank for x in self.classes))

    def __iter__(self):
        return iter(self.classes)

    def __contains__(self, arc) -> bool:
        return parse_arc(arc) in self.classes

    def __len__(self) -> int:
        return 3

    def __lt__(self, other: "ArcTriple") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "{" + ",".join(self.names) + "}"


def parse_triple(spec) -> ArcTriple:
    """Parse ``"a,b,gamma"`` (or any iterable of names) into an ArcTriple."""
    if isinstance(spec, ArcTriple):
        return spec
    if isinstance(spec, str):
        spec = [s for s in spec.replace(";", ",").split(",") if s.strip()]
    names = list(spec)
    if len(names) != 3:
        raise NotAdmissible(f"an arc triple needs exactly three names, got {len(names)}")
    return ArcTriple(tuple(names))


@lru_cache(maxsize=None)
def compatible_triples() -> tuple:
    """All 14 arc triples, ordered by (case, canonical class order)."""
    found = []
    for combo in itertools.combinations(ARCS, 3):
        if not any(crosses(x, y) for x, y in itertools.combinations(combo, 2)):
            found.append(ArcTriple(combo))
    return tuple(sorted(found, key=ArcTriple.sort_key))


def triple_case(t: ArcTriple | Iterable) -> int:
    """Case number (1, 2 or 3) of an arc triple; rejects non-admissible input."""
    if not isinstance(t, ArcTriple):
        t = parse_triple(list(t))
    return t.case
