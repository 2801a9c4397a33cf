"""The five closed-form coordinate changes between overlapping charts.

These are written out piece by piece, independently of the generic
``from_chart``/``to_chart`` composition, so the two can be checked against
each other.  Each map takes a ``ChartCoords`` in its source chart and returns
one in its target chart.
"""
from __future__ import annotations

from fractions import Fraction

from .arcs import parse_triple
from .errors import NotInGoodPosition
from .foliation import ChartCoords

__all__ = ["phi1", "phi2", "phi2_region", "phi3", "phi4", "phi5", "FORMULAS"]

ABC = parse_triple("a,b,c")
UPPER = parse_triple("A,B,C")
ALPHA_BC = parse_triple("alpha,b,c")
ALPHA_UPPER = parse_triple("alpha,B,C")
A_BETA = parse_triple("a,A,beta")
ALPHA_B_UPPER_B = parse_triple("alpha,b,B")


def _expect(cc: ChartCoords, triple) -> dict:
    if cc.triple != triple:
        raise ValueError(f"expected coordinates in chart {triple}, got {cc.triple}")
    return cc.as_dict()


def phi1(cc: ChartCoords) -> ChartCoords:
    """{a,b,c} restricted to a = 0  ->  {alpha,B,C}."""
    x = _expect(cc, ABC)
    a, b, c = x["a"], x["b"], x["c"]
    if a != 0:
        raise NotInGoodPosition("phi1 is defined on the side a = 0")
    if b >= c:
        alpha, B, C = b, b - c, Fraction(0)
    else:
        alpha, B, C = c, Fraction(0), c - b
    return ChartCoords(ALPHA_UPPER, (alpha, B, C))


def phi2_region(a, b, c) -> int:
    """Piece of the {a,b,c} triangle used by phi2: 1 central, 2 b-dominant,
    3 c-dominant.  Raises outside the overlap (a > b + c)."""
    if a > b + c:
        raise NotInGoodPosition("phi2 needs a <= b + c")
    if b >= a + c:
        return 2
    if c >= a + b:
        return 3
    return 1


def phi2(cc: ChartCoords) -> ChartCoords:
    """{a,b,c}  ->  {alpha,b,c} on the overlap a <= b + c."""
    x = _expect(cc, ABC)
    a, b, c = x["a"], x["b"], x["c"]
    region = phi2_region(a, b, c)
    if region == 1:
        alpha = (b + c - a) / 2
    elif region == 2:
        alpha = b - a
    else:
        alpha = c - a
    return ChartCoords(ALPHA_BC, (alpha, b, c))


def phi3(cc: ChartCoords) -> ChartCoords:
    """{a,b,c} with a >= b + c  ->  {a,A,beta}."""
    x = _expect(cc, ABC)
    a, b, c = x["a"], x["b"], x["c"]
    if a < b + c:
        raise NotInGoodPosition("phi3 needs a >= b + c")
    beta, A = a - b, a - b - c
    return ChartCoords(A_BETA, (a, A, beta))


def phi4(cc: ChartCoords) -> ChartCoords:
    """{alpha,b,c} with alpha >= c  ->  {alpha,b,B}."""
    x = _expect(cc, ALPHA_BC)
    alpha, b, c = x["alpha"], x["b"], x["c"]
    if alpha < c:
        raise NotInGoodPosition("phi4 needs alpha >= c")
    return ChartCoords(ALPHA_B_UPPER_B, (alpha, b, alpha - c))


def phi5(cc: ChartCoords) -> ChartCoords:
    """{A,B,C} restricted to A = 0  ->  {alpha,b,c}."""
    x = _expect(cc, UPPER)
    A, B, C = x["A"], x["B"], x["C"]
    if A != 0:
        raise NotInGoodPosition("phi5 is defined on the side A = 0")
    if C >= B:
        alpha, b, c = C, Fraction(0), C - B
    else:
        alpha, b, c = B, B - C, Fraction(0)
    return ChartCoords(ALPHA_BC, (alpha, b, c))


# name -> (map, source chart, target chart)
FORMULAS = {
    "phi1": (phi1, ABC, ALPHA_UPPER),
    "phi2": (phi2, ABC, ALPHA_BC),
    "phi3": (phi3, ABC, A_BETA),
    "phi4": (phi4, ALPHA_BC, ALPHA_B_UPPER_B),
    "phi5": (phi5, UPPER, ALPHA_BC),
}
