"""Trigonometry of right-angled hyperbolic hexagons and pentagons.

Side labels follow the boundary cycle ``a, C, b, A, c, B``; ``alpha`` is the
common perpendicular of the opposite sides ``a`` and ``A`` (likewise
``beta`` for b/B and ``gamma`` for c/C).

All relations are evaluated through log-cosh/log-sinh so the solver stays
finite for lengths up to ~1e300 and accurate for lengths down to 1e-12.
"""
from __future__ import annotations

import math
from dataclasses import astuple, dataclass, fields
from typing import Mapping

from . import _hypmath as hm
from .arcs import ArcClass, ArcTriple, parse_arc, parse_triple
from .errors import Infeasible, NonPositiveLength

__all__ = [
    "MIN_LENGTH",
    "HexagonLengths",
    "PentagonLengths",
    "FeetSolution",
    "opposite_side",
    "solve_from_alternating",
    "pentagon_between",
    "complete_pentagon",
    "solve_from_triple",
    "perpendicular_feet",
    "scaled_opposite",
    "scaling_kernel",
]

MIN_LENGTH = 1e-12

lc, ls = hm.log_cosh, hm.log_sinh


def _require_lengths(*values) -> None:
    for v in values:
        if not isinstance(v, (int, float)) or isinstance(v, bool):
            raise TypeError(f"length must be a real number, got {v!r}")
        if not math.isfinite(v) or v < MIN_LENGTH:
            raise NonPositiveLength(f"length {v!r} is not a usable positive length (min {MIN_LENGTH})")


@dataclass(frozen=True)
class HexagonLengths:
    """The six sides and three perpendiculars of a right hexagon."""

    a: float
    b: float
    c: float
    A: float
    B: float
    C: float
    alpha: float
    beta: float
    gamma: float

    def length(self, arc) -> float:
        return getattr(self, parse_arc(arc).name)

    @property
    def sides(self) -> tuple:
        """Sides in boundary order (a, C, b, A, c, B)."""
        return (self.a, self.C, self.b, self.A, self.c, self.B)

    @property
    def perpendiculars(self) -> tuple:
        return (self.alpha, self.beta, self.gamma)

    def as_tuple(self) -> tuple:
        return astuple(self)

    def swapped_case(self) -> "HexagonLengths":
        return HexagonLengths(self.A, self.B, self.C, self.a, self.b, self.c,
                              self.alpha, self.beta, self.gamma)

    def residuals(self) -> dict:
        """Relative residuals of the defining relations (log-space differences)."""
        a, b, c, A, B, C, al, be, ga = self.as_tuple()
        if min(self.as_tuple()) <= 0.0:
            return {"opposite": math.inf, "sines": math.inf, "perpendicular": math.inf}
        # compared through cosh X - 1 = 2 sinh^2(X/2), which is stricter than cosh X
        opposite = max(
            abs(hm.LN2 + 2.0 * ls(0.5 * X) - _log_opposite_m1(u, v, w))
            for X, u, v, w in ((C, a, b, c), (A, b, c, a), (B, c, a, b))
        )
        ratios = (ls(A) - ls(a), ls(B) - ls(b), ls(C) - ls(c))
        sines = max(ratios) - min(ratios)
        perp = max(
            max(abs(lc(p) - ls(u) - ls(V)), abs(lc(p) - ls(v) - ls(U)))
            for p, u, V, v, U in ((al, b, C, c, B), (be, c, A, a, C), (ga, a, B, b, A))
        )
        return {"opposite": opposite, "sines": sines, "perpendicular": perp}

    def is_consistent(self, tol: float = 1e-10) -> bool:
        return all(r <= tol for r in self.residuals().values())

    def to_json(self) -> dict:
        return {
            "sides": {k: getattr(self, k) for k in ("a", "C", "b", "A", "c", "B")},
            "perp": {k: getattr(self, k) for k in ("alpha", "beta", "gamma")},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "HexagonLengths":
        values = {**data["sides"], **data["perp"]}
        return cls(**{f.name: float(values[f.name]) for f in fields(cls)})


def _log_opposite_m1(a: float, b: float, c: float) -> float:
    # cosh C - 1 = cosh c / (sinh a sinh b) + (coth a coth b - 1), both positive
    return hm.logaddexp(lc(c) - ls(a) - ls(b), hm.log_coth_product_minus_1(a, b))


def _opposite(a: float, b: float, c: float) -> float:
    return hm.acosh1p_from_log(_log_opposite_m1(a, b, c))


def opposite_side(a: float, b: float, c: float) -> float:
    """Side between ``a`` and ``b`` (opposite ``c``) in the right hexagon with
    alternating sides a, b, c."""
    _require_lengths(a, b, c)
    return _opposite(a, b, c)


def _perp(a: float, b: float, c: float) -> float:
    """Perpendicular between a and its opposite side, from the alternating sides.

    Expanding cosh^2 = sinh^2 b sinh^2 C gives
    sinh(alpha) sinh(a) = sqrt((cosh c + e^-a cosh b)(cosh c + e^a cosh b)),
    which has no cancellation even when alpha is tiny.
    """
    log_s = 0.5 * (hm.logaddexp(lc(c), lc(b) - a) + hm.logaddexp(lc(c), lc(b) + a)) - ls(a)
    return hm.asinh_from_log(log_s)


def _from_alternating(a: float, b: float, c: float) -> HexagonLengths:
    C = _opposite(a, b, c)
    A = _opposite(b, c, a)
    B = _opposite(c, a, b)
    return HexagonLengths(a, b, c, A, B, C, _perp(a, b, c), _perp(b, c, a), _perp(c, a, b))


def solve_from_alternating(a: float, b: float, c: float) -> HexagonLengths:
    _require_lengths(a, b, c)
    return _from_alternating(a, b, c)


# -- pentagons -------------------------------------------------------------

@dataclass(frozen=True)
class PentagonLengths:
    """Consecutive sides s0..s4 of an all-right pentagon."""

    sides: tuple

    def __getitem__(self, i: int) -> float:
        return self.sides[i % 5]

    def residuals(self) -> dict:
        s = self
        sinh_form = max(abs(lc(s[i]) - ls(s[i + 2]) - ls(s[i + 3])) for i in range(5))
        coth_form = max(abs(lc(s[i]) - hm.log_coth(s[i - 1]) - hm.log_coth(s[i + 1])) for i in range(5))
        return {"sinh": sinh_form, "coth": coth_form}


def _between(u: float, v: float) -> float:
    # cosh t = coth u coth v
    return hm.acosh1p_from_log(hm.log_coth_product_minus_1(u, v))


def pentagon_between(u: float, v: float) -> float:
    """Side of an all-right pentagon lying between the non-adjacent sides u, v."""
    _require_lengths(u, v)
    return _between(u, v)


def _far(u: float, v: float) -> float:
    # side s with cosh u = sinh v sinh s
    return hm.asinh_from_log(hm.log_cosh_over_sinh(u, v))


def complete_pentagon(known: Mapping[int, float]) -> PentagonLengths:
    """All five sides of a right pentagon from two of them, keyed by position.

    Non-adjacent positions always determine a pentagon.  For adjacent
    positions the product of their sinh must be at least 1, otherwise
    ``Infeasible`` is raised.
    """
    if len(known) != 2:
        raise ValueError("exactly two sides are needed")
    (i, u), (j, v) = sorted((k % 5, float(x)) for k, x in known.items())
    _require_lengths(u, v)
    s = [0.0] * 5
    gap = (j - i) % 5
    if gap in (2, 3):
        if gap == 3:
            i, j, u, v = j, i, v, u
        # positions i, i+2 known
        s[i], s[(i + 2) % 5] = u, v
        s[(i + 1) % 5] = _between(u, v)
        s[(i + 3) % 5] = _far(u, v)
        s[(i + 4) % 5] = _far(v, u)
    elif gap in (1, 4):
        if gap == 4:
            i, j, u, v = j, i, v, u
        # positions i, i+1 known; cosh s[i+3] = sinh s[i] sinh s[i+1]
        log_z = ls(u) + ls(v)
        if log_z < 0.0:
            raise Infeasible(f"adjacent sides {u}, {v} have sinh product < 1")
        s[i], s[(i + 1) % 5] = u, v
        opposite = hm.acosh_from_log(log_z)
        if opposite < MIN_LENGTH:
            raise Infeasible("adjacent sides force a degenerate pentagon")
        s[(i + 3) % 5] = opposite
        s[(i + 2) % 5] = _between(v, opposite)
        s[(i + 4) % 5] = _between(opposite, u)
    else:
        raise ValueError("two distinct positions are needed")
    return PentagonLengths(tuple(s))


# -- hexagons from arc triples --------------------------------------------

# Cutting along a spanning arc leaves two right pentagons.  Positions 0 and 3
# are pieces of the two cut sides, position 4 is the spanning arc:
#   first  = [piece of X, d1, d2, piece of Y, sigma]
#   second = [piece of Y, e1, e2, piece of X, sigma]
# with X, Y the cut sides and d*, e* whole sides.
_SPLITS = {
    ArcClass.gamma: (ArcClass.C, ArcClass.c, (ArcClass.b, ArcClass.A), (ArcClass.B, ArcClass.a)),
    ArcClass.alpha: (ArcClass.A, ArcClass.a, (ArcClass.c, ArcClass.B), (ArcClass.C, ArcClass.b)),
    ArcClass.beta: (ArcClass.B, ArcClass.b, (ArcClass.a, ArcClass.C), (ArcClass.A, ArcClass.c)),
}


def _solve_split(t: ArcTriple, lengths: dict, tol: float) -> HexagonLengths:
    (sigma,) = [x for x in t if x.is_spanning]
    X, Y, first_sides, second_sides = _SPLITS[sigma]
    s = lengths[sigma]
    known = {}
    pentagons = []
    for corner_sides in (first_sides, second_sides):
        given = [(pos, arc) for pos, arc in ((1, corner_sides[0]), (2, corner_sides[1])) if arc in lengths]
        if len(given) != 1:
            raise Infeasible(f"triple {t} does not split into two determined pentagons")
        pos, arc = given[0]
        p = complete_pentagon({pos: lengths[arc], 4: s})
        known[corner_sides[0]], known[corner_sides[1]] = p[1], p[2]
        pentagons.append(p)
    first, second = pentagons
    known[X] = first[0] + second[3]
    known[Y] = first[3] + second[0]
    a, b, c, A, B, C = (known[k] for k in (ArcClass.a, ArcClass.b, ArcClass.c,
                                           ArcClass.A, ArcClass.B, ArcClass.C))
    perps = {
        ArcClass.alpha: _perp(a, b, c),
        ArcClass.beta: _perp(b, c, a),
        ArcClass.gamma: _perp(c, a, b),
    }
    # the shared perpendicular must agree with the one implied by the assembled sides
    if abs(perps[sigma] - s) > tol * max(1.0, s):
        raise Infeasible(f"split along {sigma} is inconsistent: {perps[sigma]!r} vs {s!r}")
    perps[sigma] = s
    return HexagonLengths(a, b, c, A, B, C, perps[ArcClass.alpha], perps[ArcClass.beta], perps[ArcClass.gamma])


def solve_from_triple(t, l1: float, l2: float, l3: float, *, tol: float = 1e-9) -> HexagonLengths:
    """The right hexagon whose arcs in ``t`` have the given lengths.

    Lengths are matched to the triple's classes in canonical order.
    """
    t = parse_triple(t)
    _require_lengths(l1, l2, l3)
    lengths = dict(zip(t.classes, (float(l1), float(l2), float(l3))))
    if t.case == 1:
        if ArcClass.a in lengths:
            return _from_alternating(lengths[ArcClass.a], lengths[ArcClass.b], lengths[ArcClass.c])
        swapped = _from_alternating(lengths[ArcClass.A], lengths[ArcClass.B], lengths[ArcClass.C])
        return swapped.swapped_case()
    return _solve_split(t, lengths, tol)


@dataclass(frozen=True)
class FeetSolution:
    """Feet of a perpendicular on its two sides.

    For ``alpha``, ``x`` is measured along a from the corner it shares with C
    and ``y`` along A from the corner it shares with b; the other
    perpendiculars use the rotated convention.
    """

    which: ArcClass
    x: float
    y: float
    residual: float


def perpendicular_feet(h: HexagonLengths, which, *, tol: float = 1e-9) -> FeetSolution:
    sigma = parse_arc(which)
    if sigma not in _SPLITS:
        raise ValueError(f"{sigma} is not a perpendicular")
    X, Y, first_sides, second_sides = _SPLITS[sigma]
    s = h.length(sigma)
    second = complete_pentagon({1: h.length(second_sides[0]), 4: s})
    first = complete_pentagon({2: h.length(first_sides[1]), 4: s})
    x, y = second[0], second[3]
    lhs = hm.log_coth(x) + hm.log_coth(y)
    rest_x, rest_y = h.length(Y) - x, h.length(X) - y
    if rest_x <= 0 or rest_y <= 0:
        raise Infeasible(f"feet of {sigma} fall outside the sides")
    rhs = hm.log_coth(rest_x) + hm.log_coth(rest_y)
    residual = max(
        abs(lhs - lc(s)),
        abs(rhs - lc(s)),
        abs(first[3] - rest_x) / max(1.0, rest_x),
        abs(first[0] - rest_y) / max(1.0, rest_y),
    )
    if residual > tol:
        raise Infeasible(f"feet of {sigma} inconsistent (residual {residual:.3g})")
    return FeetSolution(sigma, x, y, residual)


def scaled_opposite(a: float, b: float, c: float, t: float) -> float:
    """C(t): the side opposite ``c`` after multiplying a, b, c by ``t``."""
    _require_lengths(a, b, c, t)
    return _opposite(t * a, t * b, t * c)


def scaling_kernel(a: float, b: float, c: float, t: float) -> float:
    """Positive multiple of the sign function u(t) of d/dt cosh(tc)/(sinh ta sinh tb).

    u(t) = c sinh(tc) sinh(ta) sinh(tb) - a cosh(ta) cosh(tc) sinh(tb)
           - b cosh(tb) cosh(tc) sinh(ta);
    returned as u(t) * exp(-t (a + b + c)) so it never overflows.
    """
    _require_lengths(a, b, c, t)

    def S(x):  # sinh(x) e^-x
        return -0.5 * math.expm1(-2.0 * x)

    def K(x):  # cosh(x) e^-x
        return 0.5 * (1.0 + math.exp(-2.0 * x))

    ta, tb, tc = t * a, t * b, t * c
    return c * S(tc) * S(ta) * S(tb) - a * K(ta) * K(tc) * S(tb) - b * K(tb) * K(tc) * S(ta)
