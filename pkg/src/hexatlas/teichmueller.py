"""Teichmüller space of the right hexagon and its boundary of projective
measured foliations.

A point of Teichmüller space is a right hexagon.  It is embedded in the
projective space of R^6 through its six side lengths; a foliation is embedded
through its six intersection numbers with the sides.  Near the boundary, a
hexagon is described in the chart of an arc triple by the projective class of
the foliation with the same triple intersection numbers, together with the
collar coordinate exp(-(sum of the triple lengths)).
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .arcs import ARCS, ArcClass, ArcTriple, compatible_triples, parse_arc, parse_triple, swap_case
from .errors import (
    NotConverged,
    NotInChart,
    NotInGoodPosition,
    SequenceSyntaxError,
    UnsupportedSpec,
    ZeroFoliation,
)
from .foliation import (
    ChartCoords,
    FoliationClass,
    PMFPoint,
    from_chart,
    intersection_number,
    to_chart,
)
from .hexagon import HexagonLengths, solve_from_triple

__all__ = [
    "SIDES",
    "TeichPoint",
    "ProjectivePoint6",
    "Expr",
    "SequenceSpec",
    "DivergenceReport",
    "BoundaryLimit",
    "length_vector6",
    "teich_from_triple",
    "projective_embed",
    "projective_embed_f",
    "in_thick_part",
    "thick_margin",
    "q_projection",
    "boundary_chart",
    "reconstruct",
    "diverges",
    "boundary_limit",
    "pants_double",
]

SIDES = (ArcClass.a, ArcClass.b, ArcClass.c, ArcClass.A, ArcClass.B, ArcClass.C)
LOWER = SIDES[:3]
SPANNING = (ArcClass.alpha, ArcClass.beta, ArcClass.gamma)


@dataclass(frozen=True)
class TeichPoint:
    hexagon: HexagonLengths

    def length(self, arc) -> float:
        return self.hexagon.length(arc)

    def lengths(self, arcs: Iterable) -> tuple:
        return tuple(self.hexagon.length(x) for x in arcs)


def teich_from_triple(t, l1: float, l2: float, l3: float) -> TeichPoint:
    return TeichPoint(solve_from_triple(t, l1, l2, l3))


def length_vector6(p: TeichPoint) -> tuple:
    """Side lengths in the order (a, b, c, A, B, C)."""
    return p.lengths(SIDES)


@dataclass(frozen=True)
class ProjectivePoint6:
    """A ray in the closed positive orthant of R^6, stored with sum 1."""

    v: tuple

    def __post_init__(self):
        v = tuple(float(x) for x in self.v)
        if len(v) != 6:
            raise ValueError("a projective point needs six entries")
        if any(x < 0 or not math.isfinite(x) for x in v):
            raise ValueError(f"entries must be finite and nonnegative, got {v}")
        if not any(x > 0 for x in v) or abs(math.fsum(v) - 1.0) > 1e-12:
            raise ValueError(f"entries must sum to 1, got {v}")
        object.__setattr__(self, "v", v)

    @classmethod
    def from_vector(cls, raw) -> "ProjectivePoint6":
        total = math.fsum(raw)
        if not total > 0:
            raise ValueError("the zero vector has no projective class")
        return cls(tuple(x / total for x in raw))

    def distance(self, other: "ProjectivePoint6") -> float:
        return max(abs(x - y) for x, y in zip(self.v, other.v))

    def as_dict(self) -> dict:
        return {k.value: x for k, x in zip(SIDES, self.v)}


def projective_embed(p: TeichPoint) -> ProjectivePoint6:
    return ProjectivePoint6.from_vector(length_vector6(p))


def projective_embed_f(F: FoliationClass) -> ProjectivePoint6:
    """Projective class of (i(F,a), ..., i(F,C))."""
    if F.is_zero():
        raise ZeroFoliation("the empty foliation has no projective class")
    raw = [intersection_number(F, x) for x in SIDES]
    total = sum(raw)
    if total == 0:
        # only reachable for foliations missing every side, which do not exist
        raise ZeroFoliation(f"{F!r} meets no side")
    return ProjectivePoint6(tuple(float(x / total) for x in raw))


# -- thick parts and the boundary charts -----------------------------------

def in_thick_part(p: TeichPoint, t, eps: float) -> bool:
    if not eps > 0:
        raise ValueError("eps must be positive")
    return all(x > eps for x in p.lengths(parse_triple(t)))


def thick_margin(p: TeichPoint) -> tuple:
    """The triple whose shortest arc is longest, and that shortest length.

    ``p`` lies in the thick part of that triple for every eps below the
    returned value.
    """
    best = max(compatible_triples(), key=lambda t: min(p.lengths(t)))
    return best, min(p.lengths(best))


def q_projection(p: TeichPoint, t) -> FoliationClass:
    """Foliation in good position whose intersection numbers with the arcs
    of ``t`` equal the hexagon's lengths of those arcs."""
    t = parse_triple(t)
    coords = tuple(Fraction(x) for x in p.lengths(t))
    return from_chart(ChartCoords(t, coords))


def boundary_chart(x, t) -> tuple:
    """Chart of the compactification at ``t``: (PMF point, collar in [0, 1))."""
    t = parse_triple(t)
    if isinstance(x, PMFPoint):
        try:
            cc = to_chart(from_chart(x), t)
        except NotInGoodPosition as exc:
            raise NotInChart(str(exc)) from None
        return PMFPoint.from_chart_coords(cc), 0.0
    if not isinstance(x, TeichPoint):
        raise TypeError(f"expected a TeichPoint or PMFPoint, got {type(x).__name__}")
    F = q_projection(x, t)
    try:
        cc = to_chart(F, t)
    except NotInGoodPosition as exc:
        raise NotInChart(str(exc)) from None
    return PMFPoint.from_chart_coords(cc), math.exp(-math.fsum(x.lengths(t)))


def reconstruct(point: PMFPoint, collar: float) -> TeichPoint:
    """Inverse of ``boundary_chart`` on Teichmüller space (collar in (0, 1))."""
    if not 0.0 < collar < 1.0:
        raise NotInChart(f"collar {collar!r} is not an interior value")
    scale = -math.log(collar)
    return teich_from_triple(point.triple, *(float(c) * scale for c in point.values))


def pants_double(p: TeichPoint) -> tuple:
    """Cuff lengths of the pair of pants made of two copies of ``p`` glued
    along A, B and C."""
    h = p.hexagon
    return (2.0 * h.a, 2.0 * h.b, 2.0 * h.c)


# -- sequences of hexagons ---------------------------------------------------

@dataclass(frozen=True)
class Expr:
    """k_exp e^n + k_lin n + k_const + k_inv / n, nonnegative coefficients."""

    k_exp: float = 0.0
    k_lin: float = 0.0
    k_const: float = 0.0
    k_inv: float = 0.0

    def __post_init__(self):
        ks = (self.k_exp, self.k_lin, self.k_const, self.k_inv)
        if any(not math.isfinite(k) or k < 0 for k in ks):
            raise SequenceSyntaxError(f"coefficients must be finite and nonnegative, got {ks}")
        if not any(k > 0 for k in ks):
            raise SequenceSyntaxError("expression is identically zero")

    def __call__(self, n: int) -> float:
        try:
            big = self.k_exp * math.exp(n) if self.k_exp else 0.0
        except OverflowError:
            raise UnsupportedSpec(f"e^{n} overflows double precision") from None
        return big + self.k_lin * n + self.k_const + self.k_inv / n

    @property
    def behaviour(self) -> str:
        """'inf', 'K' (bounded away from 0 and infinity) or '0'."""
        if self.k_exp > 0 or self.k_lin > 0:
            return "inf"
        if self.k_const > 0:
            return "K"
        return "0"

    def __str__(self) -> str:
        terms = []
        for k, unit in ((self.k_exp, "exp(n)"), (self.k_lin, "n")):
            if k:
                terms.append(unit if k == 1 else f"{_num(k)}*{unit}")
        if self.k_const:
            terms.append(_num(self.k_const))
        if self.k_inv:
            terms.append(f"{_num(self.k_inv)}/n")
        return "+".join(terms)


def _num(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else repr(float(x))


_NUMBER = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_TERM = re.compile(
    rf"^(?:(?P<k>{_NUMBER})\s*\*?\s*)?(?P<unit>exp\(n\)|e\^n|n)$"
    rf"|^(?P<kinv>{_NUMBER})?\s*/\s*n$"
    rf"|^(?P<const>{_NUMBER})$"
)


def parse_expr(text: str) -> Expr:
    ks = {"k_exp": 0.0, "k_lin": 0.0, "k_const": 0.0, "k_inv": 0.0}
    terms = [s.strip() for s in text.replace(" ", "").split("+")]
    if not text.strip() or any(not s for s in terms):
        raise SequenceSyntaxError(f"empty term in {text!r}")
    for term in terms:
        m = _TERM.match(term)
        if m is None:
            raise SequenceSyntaxError(f"cannot read term {term!r}; use exp(n), n, constants and k/n")
        if m.group("unit"):
            key = "k_lin" if m.group("unit") == "n" else "k_exp"
            ks[key] += float(m.group("k") or 1)
        elif m.group("const") is not None:
            ks["k_const"] += float(m.group("const"))
        else:
            ks["k_inv"] += float(m.group("kinv") or 1)
    return Expr(**ks)


@dataclass(frozen=True)
class SequenceSpec:
    """A sequence of hexagons n -> teich_from_triple(triple, exprs evaluated at n)."""

    triple: ArcTriple
    exprs: tuple

    def __post_init__(self):
        t = parse_triple(self.triple)
        if len(self.exprs) != 3 or not all(isinstance(e, Expr) for e in self.exprs):
            raise SequenceSyntaxError("a sequence needs one expression per triple arc")
        object.__setattr__(self, "triple", t)

    @classmethod
    def from_mapping(cls, data: Mapping) -> "SequenceSpec":
        exprs = {parse_arc(k): (v if isinstance(v, Expr) else parse_expr(str(v))) for k, v in data.items()}
        t = parse_triple(list(exprs))
        return cls(t, tuple(exprs[x] for x in t))

    @classmethod
    def parse(cls, text: str) -> "SequenceSpec":
        """Read ``"a=2*exp(n)+3; b=n; c=1/n"``."""
        data = {}
        for part in (p.strip() for p in text.split(";")):
            if not part:
                continue
            name, eq, rhs = part.partition("=")
            if not eq:
                raise SequenceSyntaxError(f"expected name=expression, got {part!r}")
            try:
                arc = parse_arc(name)
            except ValueError as exc:
                raise SequenceSyntaxError(str(exc)) from None
            if arc in data:
                raise SequenceSyntaxError(f"{arc} given twice")
            data[arc] = parse_expr(rhs)
        if len(data) != 3:
            raise SequenceSyntaxError(f"expected three expressions, got {len(data)}")
        try:
            return cls.from_mapping(data)
        except ValueError as exc:
            if isinstance(exc, SequenceSyntaxError):
                raise
            raise SequenceSyntaxError(str(exc)) from None

    def values(self, n: int) -> tuple:
        return tuple(e(n) for e in self.exprs)

    def point(self, n: int) -> TeichPoint:
        return teich_from_triple(self.triple, *self.values(n))

    def __str__(self) -> str:
        return "; ".join(f"{x}={e}" for x, e in zip(self.triple, self.exprs))


@dataclass(frozen=True)
class DivergenceReport:
    diverges: bool
    witness: ArcTriple | None
    pattern: str
    method: str

    def __iter__(self):
        return iter((self.diverges, self.witness))


# sample points and threshold of the numeric fallback
FALLBACK_NODES = (20, 40)
FALLBACK_MIN_GROWTH = 0.25


def _symbolic_lower(kinds: tuple) -> ArcTriple | None | bool:
    """Witness for a sequence given in {a,b,c}; False when undecided."""
    inf = [i for i, k in enumerate(kinds) if k == "inf"]
    bounded = [i for i, k in enumerate(kinds) if k == "K"]
    zero = [i for i, k in enumerate(kinds) if k == "0"]
    if len(zero) == 3:
        return ArcTriple.of("A", "B", "C")
    if len(inf) == 3:
        return ArcTriple.of("a", "b", "c")
    if len(bounded) == 3:
        return None
    if len(inf) == 2 and len(bounded) == 1:
        (k,) = bounded
        return ArcTriple.of(*(LOWER[i] for i in inf), SPANNING[k])
    if len(inf) == 1 and len(bounded) == 2:
        (i,) = inf
        return ArcTriple.of(LOWER[i], swap_case(LOWER[i]), SPANNING[(i + 2) % 3])
    if len(bounded) == 2 and len(zero) == 1:
        (z,) = zero
        return ArcTriple.of(*(swap_case(LOWER[i]) for i in bounded), SPANNING[z])
    return False


def _pattern(kinds: tuple) -> str:
    return "{" + ",".join(kinds) + "}"


def _numeric_witness(spec: SequenceSpec) -> ArcTriple:
    lo, hi = (spec.point(n) for n in FALLBACK_NODES)
    scores = [(min(hi.lengths(t)), min(lo.lengths(t)), t) for t in compatible_triples()]
    top, before, best = max(scores, key=lambda s: s[0])
    if top - before < FALLBACK_MIN_GROWTH:
        raise UnsupportedSpec(
            f"no arc triple grows by {FALLBACK_MIN_GROWTH} between n={FALLBACK_NODES[0]} "
            f"and n={FALLBACK_NODES[1]} for {spec}"
        )
    return best


def diverges(spec: SequenceSpec) -> DivergenceReport:
    """Whether the hexagons leave every compact set, and an arc triple whose
    three lengths all tend to infinity."""
    kinds = tuple(e.behaviour for e in spec.exprs)
    pattern = _pattern(kinds)
    t = spec.triple
    if all(k == "inf" for k in kinds):
        return DivergenceReport(True, t, pattern, "symbolic")
    if all(k == "K" for k in kinds):
        # the triple lengths are coordinates, so a bounded sequence stays in a compact set
        return DivergenceReport(False, None, pattern, "symbolic")
    witness = False
    if t == ArcTriple.of("a", "b", "c"):
        witness = _symbolic_lower(kinds)
    elif t == ArcTriple.of("A", "B", "C"):
        witness = _symbolic_lower(kinds)
        if witness:
            witness = ArcTriple(tuple(swap_case(x) for x in witness))
    if witness is False:
        return DivergenceReport(True, _numeric_witness(spec), pattern, "numeric")
    return DivergenceReport(witness is not None, witness, pattern, "symbolic")


# -- boundary limits ---------------------------------------------------------

def _neville(hs: list, ys: list) -> list:
    """Value at h = 0 of the interpolating polynomial, componentwise."""
    p = [list(y) for y in ys]
    m = len(hs)
    for k in range(1, m):
        for i in range(m - k):
            p[i] = [
                (hs[i + k] * u - hs[i] * v) / (hs[i + k] - hs[i])
                for u, v in zip(p[i], p[i + 1])
            ]
    return p[0]


EXTRAPOLATION_NODES = 6


def _nodes(N: int, count: int) -> list:
    """``count`` evenly spread sample indices ending at N, all at least 2."""
    step = max(1, N // (EXTRAPOLATION_NODES + 1))
    return [n for n in (N - j * step for j in range(count)) if n >= 2]


def _sup(u, v) -> float:
    return max(abs(x - y) for x, y in zip(u, v))


def _extrapolate(series: dict, N: int, h) -> tuple:
    """(estimate, error) of polynomial extrapolation in h(n) to h = 0.

    The error is the larger change of the estimate when the window ends at
    N - 1 instead of N, and when one node is dropped.
    """
    def estimate(top: int, count: int):
        ns = _nodes(top, count)
        if len(ns) < count:
            return None
        return _neville([h(n) for n in ns], [series[n] for n in ns])

    m = EXTRAPOLATION_NODES
    best = estimate(N, m)
    if best is None:
        return None, math.inf
    shifted = estimate(N - 1, m)
    lower = estimate(N, m - 1)
    if shifted is None:
        return best, math.inf
    return best, max(_sup(best, shifted), _sup(best, lower))


SCHEMES = ("raw", "richardson", "log")


@dataclass(frozen=True)
class BoundaryLimit:
    limit: ProjectivePoint6
    chart: ArcTriple
    witness: ArcTriple
    foliation: FoliationClass
    chart_point: PMFPoint
    scheme: str
    error_estimate: float
    raw_at_nmax: ProjectivePoint6
    collar_at_nmax: float
    n_max: int
    trace: tuple = field(repr=False, default=())

    def to_json(self) -> dict:
        return {
            "limit": list(self.limit.v),
            "chart": self.chart.names,
            "collar_at_nmax": self.collar_at_nmax,
            "witness": self.witness.names,
            "scheme": self.scheme,
            "error_estimate": self.error_estimate,
            "raw_at_nmax": list(self.raw_at_nmax.v),
            "n_max": self.n_max,
        }


TRACE_HEADER = ("n",) + tuple(x.value for x in ARCS) + tuple(f"p_{x.value}" for x in SIDES)


def _snap(x: float) -> Fraction:
    return Fraction(max(x, 0.0)).limit_denominator(10**9)


def boundary_limit(spec: SequenceSpec, n_max: int = 40, tol: float = 1e-6) -> BoundaryLimit:
    """Limit in the Thurston boundary of a divergent sequence of hexagons.

    The witness triple's normalized lengths are chart coordinates converging
    to the limit's chart coordinates.  They are extrapolated to n = infinity
    by the first scheme that passes: the raw values, polynomial extrapolation
    in 1/n, then in 1/log n.  A scheme passes when its estimate moves by at
    most ``tol`` both from n_max - 1 to n_max and between consecutive orders.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    if not tol > 0:
        raise ValueError("tol must be positive")
    report = diverges(spec)
    if not report.diverges:
        raise ValueError(f"{spec} stays bounded; there is no boundary limit")
    w = report.witness
    series, trace = {}, []
    point = None
    for n in range(1, n_max + 1):
        point = spec.point(n)
        lw = point.lengths(w)
        total = math.fsum(lw)
        series[n] = [x / total for x in lw]
        six = ProjectivePoint6.from_vector(length_vector6(point))
        trace.append((n,) + point.lengths(ARCS) + six.v)

    candidates = [("raw", series[n_max], _sup(series[n_max], series[n_max - 1]))]
    candidates.append(("richardson", *_extrapolate(series, n_max, lambda n: 1.0 / n)))
    candidates.append(("log", *_extrapolate(series, n_max, lambda n: 1.0 / math.log(n))))
    accepted = [c for c in candidates if c[1] is not None and c[2] <= tol]
    if not accepted:
        best = min(c[2] for c in candidates)
        raise NotConverged(f"no scheme converged to {tol:g} at n_max={n_max} (best {best:.3g})")
    scheme, estimate, error = accepted[0]

    coords = [_snap(x) for x in estimate]
    total = sum(coords)
    if total == 0:
        raise NotConverged("extrapolated chart coordinates vanish")
    cc = ChartCoords(w, tuple(x / total for x in coords))
    F = from_chart(cc)
    return BoundaryLimit(
        limit=projective_embed_f(F),
        chart=w,
        witness=w,
        foliation=F,
        chart_point=PMFPoint(cc),
        scheme=scheme,
        error_estimate=error,
        raw_at_nmax=projective_embed(point),
        collar_at_nmax=math.exp(-math.fsum(point.lengths(w))),
        n_max=n_max,
        trace=tuple(trace),
    )
