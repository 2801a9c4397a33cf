import itertools
import math

import pytest
from hypothesis import given, strategies as st

from hexatlas.arcs import (
    ARCS,
    CORNER_ARCS,
    SPANNING_ARCS,
    ArcClass,
    ArcTriple,
    Edge,
    compatible_triples,
    crosses,
    edge_pair,
    parse_arc,
    parse_triple,
    rotate,
    swap_case,
    triple_case,
)
from hexatlas.errors import NotAdmissible

E = Edge

CASE_LISTS = {
    1: ["a,b,c", "A,B,C"],
    2: ["a,b,gamma", "a,beta,c", "A,B,gamma", "A,beta,C", "alpha,b,c", "alpha,B,C"],
    3: ["a,A,beta", "a,A,gamma", "alpha,b,B", "alpha,c,C", "b,B,gamma", "beta,c,C"],
}


def _segments_cross(p, q, r, s) -> bool:
    def orient(u, v, w):
        return (v[0] - u[0]) * (w[1] - u[1]) - (v[1] - u[1]) * (w[0] - u[0])

    d1, d2 = orient(r, s, p), orient(r, s, q)
    d3, d4 = orient(p, q, r), orient(p, q, s)
    return d1 * d2 < 0 and d3 * d4 < 0


def _point(edge: int, t: float):
    angle = 2 * math.pi * (edge + t) / 6
    return math.cos(angle), math.sin(angle)


def chord_oracle(x: ArcClass, y: ArcClass) -> int:
    """Minimal number of crossings of straight chords realizing x and y, with
    endpoints free to slide inside their boundary edges."""
    spots = (0.2, 0.4, 0.6, 0.8)
    ex, ey = sorted(edge_pair(x)), sorted(edge_pair(y))
    best = 1
    for tx in itertools.product(spots, repeat=2):
        for ty in itertools.product(spots, repeat=2):
            p, q = (_point(e, t) for e, t in zip(ex, tx))
            r, s = (_point(e, t) for e, t in zip(ey, ty))
            best = min(best, int(_segments_cross(p, q, r, s)))
    return best


def test_edge_pairs():
    assert edge_pair(ArcClass.alpha) == {E.a, E.A}
    assert edge_pair(ArcClass.a) == {E.B, E.C}
    assert edge_pair(ArcClass.gamma) == {E.c, E.C}
    for x in ARCS:
        u, v = edge_pair(x)
        assert not u.adjacent(v) and u != v


@pytest.mark.parametrize("x,y,expected", [("a", "A", 0), ("alpha", "beta", 1), ("a", "a", 0), ("a", "B", 1)])
def test_crossing_examples(x, y, expected):
    assert crosses(x, y) == expected


def test_crossing_matches_chord_oracle():
    for x, y in itertools.product(ARCS, repeat=2):
        if x is y:
            assert crosses(x, y) == 0
        else:
            assert crosses(x, y) == chord_oracle(x, y), (x, y)


def test_crossing_degrees():
    for x in ARCS:
        degree = sum(crosses(x, y) for y in ARCS)
        assert degree == (4 if x in SPANNING_ARCS else 3)


def test_crossing_symmetric():
    for x, y in itertools.product(ARCS, repeat=2):
        assert crosses(x, y) == crosses(y, x)


def test_census_matches_case_lists():
    triples = compatible_triples()
    assert len(triples) == 14
    expected = {parse_triple(s): case for case, names in CASE_LISTS.items() for s in names}
    assert set(triples) == set(expected)
    for t in triples:
        assert t.case == expected[t]


def test_census_equals_brute_force():
    brute = {
        frozenset(c) for c in itertools.combinations(ARCS, 3)
        if all(chord_oracle(x, y) == 0 for x, y in itertools.combinations(c, 2))
    }
    assert brute == {frozenset(t.classes) for t in compatible_triples()}


def test_canonical_order():
    assert [x.value for x in ARCS] == ["a", "A", "alpha", "b", "B", "beta", "c", "C", "gamma"]
    names = [t.names for t in compatible_triples()]
    assert names[:2] == [["a", "b", "c"], ["A", "B", "C"]]
    assert names[2] == ["a", "b", "gamma"]
    assert names[-1] == ["beta", "c", "C"]
    assert parse_triple("gamma,b,a").names == ["a", "b", "gamma"]


@pytest.mark.parametrize("spec,case", [("a,b,c", 1), ("a,beta,c", 2), ("a,A,gamma", 3)])
def test_triple_case(spec, case):
    assert triple_case(parse_triple(spec)) == case
    assert triple_case(spec.split(",")) == case


@pytest.mark.parametrize("bad", ["a,b,alpha", "a,a,b", "a,b", "a,b,c,A", "a,b,delta"])
def test_rejects_non_admissible(bad):
    with pytest.raises(NotAdmissible):
        parse_triple(bad)


def test_greek_aliases():
    assert parse_arc("α") is ArcClass.alpha
    assert parse_triple("a,b,γ") == parse_triple("a,b,gamma")
    assert str(parse_triple("a,b,γ")) == "{a,b,gamma}"


def test_rotation_is_automorphism():
    for x, y in itertools.product(ARCS, repeat=2):
        assert crosses(rotate(x), rotate(y)) == crosses(x, y)
        assert crosses(swap_case(x), swap_case(y)) == crosses(x, y)
    triples = set(compatible_triples())
    for t in triples:
        r = ArcTriple(tuple(rotate(x) for x in t))
        assert r in triples and r.case == t.case


@given(st.sampled_from(ARCS), st.sampled_from(ARCS), st.integers(0, 5))
def test_rotation_powers_preserve_crossing(x, y, k):
    assert crosses(rotate(x, k), rotate(y, k)) == crosses(x, y)
    assert rotate(x, 3) is x


def test_corner_arc_partition():
    assert CORNER_ARCS | SPANNING_ARCS == set(ARCS)
    assert not CORNER_ARCS & SPANNING_ARCS
