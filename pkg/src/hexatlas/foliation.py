"""Measured foliations on the hexagon in weight coordinates.

A foliation class is a nonnegative combination of pairwise disjoint arc
classes (one band of parallel leaves per arc).  Its support always lies in a
face of the simplicial complex whose vertices are the nine arc classes and
whose triangles are the 14 arc triples; that complex is the sphere PMF.

Everything here is exact: weights and chart coordinates are ``Fraction``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Mapping

from .arcs import (
    ARCS,
    ArcTriple,
    compatible_triples,
    crosses,
    parse_arc,
    parse_triple,
)
from .errors import (
    Infeasible,
    NotInGoodPosition,
    ZeroCoords,
    ZeroFoliation,
)

__all__ = [
    "FoliationClass",
    "ChartCoords",
    "PMFPoint",
    "PMFCellComplex",
    "as_fraction",
    "intersection_number",
    "good_position",
    "to_chart",
    "from_chart",
    "chart_solutions",
    "chart_regions",
    "pl_transition",
    "charts_containing",
    "projectivize",
    "pmf_cell_complex",
]


def as_fraction(x) -> Fraction:
    """Exact rational value of ``x`` (ints, Fractions, "p/q" strings, floats)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"non-finite value {x!r}")
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


@dataclass(frozen=True, eq=False)
class FoliationClass:
    """Weights on a compatible set of arc classes.

    ``weights`` may be given as any mapping from arc names to numbers; it is
    stored in canonical class order with zero entries dropped.
    """

    weights: Mapping = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for key, value in dict(self.weights).items():
            arc = parse_arc(key)
            w = as_fraction(value)
            if w < 0:
                raise ValueError(f"negative weight {w} on {arc}")
            if w:
                clean[arc] = clean.get(arc, Fraction(0)) + w
        support = sorted(clean)
        for x, y in itertools.combinations(support, 2):
            if crosses(x, y):
                raise ValueError(f"support classes {x} and {y} cross")
        object.__setattr__(self, "weights", {arc: clean[arc] for arc in support})

    @classmethod
    def empty(cls) -> "FoliationClass":
        return cls({})

    @property
    def support(self) -> tuple:
        return tuple(self.weights)

    def weight(self, arc) -> Fraction:
        return self.weights.get(parse_arc(arc), Fraction(0))

    def is_zero(self) -> bool:
        return not self.weights

    def scaled(self, s) -> "FoliationClass":
        s = as_fraction(s)
        if s < 0:
            raise ValueError("scale factor must be nonnegative")
        return FoliationClass({k: s * v for k, v in self.weights.items()})

    def __add__(self, other: "FoliationClass") -> "FoliationClass":
        merged = dict(self.weights)
        for k, v in other.weights.items():
            merged[k] = merged.get(k, Fraction(0)) + v
        return FoliationClass(merged)

    def __mul__(self, s) -> "FoliationClass":
        return self.scaled(s)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, FoliationClass):
            return NotImplemented
        return self.weights == other.weights

    def __hash__(self) -> int:
        return hash(tuple(self.weights.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{k.value}: {v}" for k, v in self.weights.items())
        return f"FoliationClass({{{body}}})"


def intersection_number(F: FoliationClass, c) -> Fraction:
    c = parse_arc(c)
    return sum((w * crosses(s, c) for s, w in F.weights.items()), Fraction(0))


def good_position(F: FoliationClass, t) -> bool:
    """True iff F meets ``t`` with positive total measure and has no band
    parallel to one of its arcs."""
    t = parse_triple(t)
    if any(F.weight(x) for x in t):
        return False
    return sum(intersection_number(F, x) for x in t) > 0


# -- chart regions ---------------------------------------------------------

def _inverse3(m) -> tuple:
    (a, b, c), (d, e, f), (g, h, i) = m
    det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    if det == 0:
        raise Infeasible("singular chart matrix")
    adj = (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    )
    return tuple(tuple(Fraction(x, det) for x in row) for row in adj)


def _render_form(coeffs, names) -> str | None:
    """``"alpha>=b"`` for the form alpha - b >= 0; None for a bare coordinate."""
    scale = math.lcm(*(q.denominator for q in coeffs))
    ints = [int(q * scale) for q in coeffs]
    g = math.gcd(*ints) or 1
    ints = [k // g for k in ints]
    lhs = [(k, n) for k, n in zip(ints, names) if k > 0]
    rhs = [(-k, n) for k, n in zip(ints, names) if k < 0]
    if not rhs:
        return None

    def side(terms):
        return "+".join(n if k == 1 else f"{k}*{n}" for k, n in terms)

    return f"{side(lhs) or '0'}>={side(rhs)}"


@dataclass(frozen=True)
class _Region:
    face: tuple
    matrix: tuple
    inverse: tuple
    tag: str

    def weights_for(self, coords) -> tuple:
        return tuple(sum((r * x for r, x in zip(row, coords)), Fraction(0)) for row in self.inverse)

    def contains(self, coords) -> bool:
        return all(w >= 0 for w in self.weights_for(coords))


@lru_cache(maxsize=None)
def chart_regions(t) -> tuple:
    """Linear pieces of the chart of ``t``, one per maximal face disjoint
    from ``t``, in canonical face order."""
    t = parse_triple(t)
    names = t.names
    regions = []
    for face in compatible_triples():
        if set(face) & set(t):
            continue
        matrix = tuple(tuple(crosses(s, x) for s in face) for x in t)
        inverse = _inverse3(matrix)
        if t.case == 1:
            spanning = [s for s in face if s.is_spanning]
            if not spanning:
                tag = "CENTRAL"
            else:
                (dominant,) = [x for x in t if crosses(spanning[0], x)]
                tag = f"{dominant.value.upper()}-DOMINANT"
        else:
            forms = [_render_form(row, names) for row in inverse]
            tag = ",".join(f for f in forms if f)
        regions.append(_Region(face.classes, matrix, inverse, tag))
    return tuple(regions)


@dataclass(frozen=True)
class ChartCoords:
    """Intersection numbers of a foliation with the arcs of a triple.

    ``region`` is derived from the coordinates when omitted; an explicit tag
    must be one of the regions containing the point.
    """

    triple: ArcTriple
    coords: tuple
    region: str | None = None

    def __post_init__(self):
        t = parse_triple(self.triple)
        coords = tuple(as_fraction(x) for x in self.coords)
        if len(coords) != 3:
            raise ValueError("chart coordinates need three entries")
        if any(x < 0 for x in coords):
            raise ValueError(f"chart coordinates must be nonnegative, got {coords}")
        if sum(coords) == 0:
            raise ZeroCoords(f"all coordinates vanish in chart {t}")
        tags = [r.tag for r in chart_regions(t) if r.contains(coords)]
        if not tags:
            raise Infeasible(f"no region of chart {t} contains {coords}")
        if self.region is None:
            region = tags[0]
        elif self.region in tags:
            region = self.region
        else:
            raise ValueError(f"region {self.region!r} inconsistent with {coords} (expected one of {tags})")
        object.__setattr__(self, "triple", t)
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "region", region)

    def coord(self, arc) -> Fraction:
        return self.coords[self.triple.classes.index(parse_arc(arc))]

    def as_dict(self) -> dict:
        return dict(zip(self.triple.names, self.coords))

    def normalized(self) -> "ChartCoords":
        total = sum(self.coords)
        return ChartCoords(self.triple, tuple(x / total for x in self.coords))


@dataclass(frozen=True)
class PMFPoint:
    """A projective class, recorded in one chart with coordinates summing to 1."""

    coords: ChartCoords

    def __post_init__(self):
        if sum(self.coords.coords) != 1:
            raise ValueError("PMF coordinates must sum to 1")

    @classmethod
    def from_chart_coords(cls, cc: ChartCoords) -> "PMFPoint":
        return cls(cc.normalized())

    @property
    def triple(self) -> ArcTriple:
        return self.coords.triple

    @property
    def values(self) -> tuple:
        return self.coords.coords


def to_chart(F: FoliationClass, t) -> ChartCoords:
    t = parse_triple(t)
    if not good_position(F, t):
        raise NotInGoodPosition(f"{F!r} is not in good position with respect to {t}")
    return ChartCoords(t, tuple(intersection_number(F, x) for x in t))


def _coerce_chart(cc, coords=None) -> ChartCoords:
    if isinstance(cc, PMFPoint):
        return cc.coords
    if isinstance(cc, ChartCoords):
        return cc
    return ChartCoords(parse_triple(cc), tuple(coords))


def chart_solutions(cc, coords=None) -> list:
    """Every (region tag, foliation) pair solving the chart equations with
    nonnegative weights.  More than one only on region boundaries."""
    cc = _coerce_chart(cc, coords)
    out = []
    for region in chart_regions(cc.triple):
        w = region.weights_for(cc.coords)
        if all(x >= 0 for x in w):
            out.append((region.tag, FoliationClass(dict(zip(region.face, w)))))
    return out


def from_chart(cc, coords=None) -> FoliationClass:
    """The unique foliation in good position with the given chart coordinates.

    Accepts a ChartCoords/PMFPoint, or a triple plus a coordinate sequence.
    """
    cc = _coerce_chart(cc, coords)
    solutions = chart_solutions(cc)
    if not solutions:
        raise Infeasible(f"no nonnegative solution for {cc}")
    F = solutions[0][1]
    if any(G != F for _, G in solutions[1:]):
        raise Infeasible(f"chart {cc.triple} has distinct solutions at {cc.coords}")
    return F


def pl_transition(cc: ChartCoords, target) -> ChartCoords:
    """Change of chart coordinates; piecewise linear in ``cc.coords``."""
    return to_chart(from_chart(cc), parse_triple(target))


def charts_containing(F: FoliationClass) -> list:
    if F.is_zero():
        raise ZeroFoliation("the empty foliation lies in no chart")
    return [t for t in compatible_triples() if good_position(F, t)]


def projectivize(F: FoliationClass) -> PMFPoint:
    """Projective class of F, expressed in its first containing chart."""
    t = charts_containing(F)[0]
    return PMFPoint.from_chart_coords(to_chart(F, t))


# -- the sphere PMF --------------------------------------------------------

def _key(simplex) -> tuple:
    return tuple(sorted(parse_arc(x) for x in simplex))


@dataclass(frozen=True)
class PMFCellComplex:
    """A 2-dimensional simplicial complex given by explicit vertex, edge and
    face lists (each simplex a tuple of arc classes in canonical order)."""

    vertices: tuple
    edges: tuple
    faces: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(parse_arc(v) for v in self.vertices)))
        object.__setattr__(self, "edges", tuple(sorted(_key(e) for e in self.edges)))
        object.__setattr__(self, "faces", tuple(sorted(_key(f) for f in self.faces)))

    @property
    def counts(self) -> tuple:
        return len(self.vertices), len(self.edges), len(self.faces)

    def euler_characteristic(self) -> int:
        v, e, f = self.counts
        return v - e + f

    def faces_of_edge(self, edge) -> list:
        edge = set(_key(edge))
        return [f for f in self.faces if edge <= set(f)]

    def vertex_link(self, v) -> list:
        v = parse_arc(v)
        return [tuple(x for x in f if x is not v) for f in self.faces if v in f]

    def link_is_cycle(self, v) -> bool:
        link = self.vertex_link(v)
        if len(link) < 3:
            return False
        degree = {}
        for x, y in link:
            degree[x] = degree.get(x, 0) + 1
            degree[y] = degree.get(y, 0) + 1
        if any(d != 2 for d in degree.values()):
            return False
        return _connected(degree, link)

    def is_connected(self) -> bool:
        return _connected({v: None for v in self.vertices}, self.edges)

    def checks(self) -> dict:
        """Named closed-surface checks; every value True for a 2-sphere."""
        edge_set = set(self.edges)
        face_edges_present = all(
            _key(pair) in edge_set for f in self.faces for pair in itertools.combinations(f, 2)
        )
        return {
            "euler_characteristic_2": self.euler_characteristic() == 2,
            "faces_bounded_by_edges": face_edges_present,
            "edge_in_two_faces": all(len(self.faces_of_edge(e)) == 2 for e in self.edges),
            "vertex_links_are_cycles": all(self.link_is_cycle(v) for v in self.vertices),
            "connected": self.is_connected(),
        }

    def to_json(self) -> dict:
        return {
            "vertices": [v.value for v in self.vertices],
            "edges": [[x.value for x in e] for e in self.edges],
            "faces": [[x.value for x in f] for f in self.faces],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "PMFCellComplex":
        return cls(tuple(data["vertices"]), tuple(data["edges"]), tuple(data["faces"]))


def _connected(nodes: Iterable, edges: Iterable) -> bool:
    adjacency = {v: set() for v in nodes}
    for x, y in edges:
        adjacency.setdefault(x, set()).add(y)
        adjacency.setdefault(y, set()).add(x)
    if not adjacency:
        return False
    start = next(iter(adjacency))
    seen, stack = {start}, [start]
    while stack:
        for nxt in adjacency[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return len(seen) == len(adjacency)


def pmf_cell_complex() -> PMFCellComplex:
    edges = [pair for pair in itertools.combinations(ARCS, 2) if not crosses(*pair)]
    return PMFCellComplex(ARCS, tuple(edges), tuple(t.classes for t in compatible_triples()))
