"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

The lines are also collected into RESULTS and echoed in the pytest terminal
summary (see conftest.py).  Run this file directly for the bare list.
"""
import itertools
import math
import random
import time
from fractions import Fraction

from hexatlas.arcs import ARCS, compatible_triples, parse_triple
from hexatlas.foliation import (
    ChartCoords,
    FoliationClass,
    charts_containing,
    from_chart,
    intersection_number,
    pl_transition,
    pmf_cell_complex,
    to_chart,
)
from hexatlas.hexagon import (
    opposite_side,
    scaled_opposite,
    scaling_kernel,
    solve_from_alternating,
    solve_from_triple,
)
from hexatlas.pl_formulas import FORMULAS, phi2_region
from hexatlas.teichmueller import (
    SequenceSpec,
    boundary_chart,
    boundary_limit,
    diverges,
    projective_embed,
    projective_embed_f,
    q_projection,
    reconstruct,
    teich_from_triple,
)

RESULTS = []


def report(n: int, ok: bool, detail: str) -> None:
    line = f"CRITERION {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def rel(x: float, y: float) -> float:
    return abs(x - y) / max(abs(y), 1e-300)


def random_fraction(rng, hi=30, den=24):
    return Fraction(rng.randint(0, hi * den), rng.randint(1, den))


def random_hexagon(rng, lo=0.2, hi=4.0):
    return solve_from_alternating(*(rng.uniform(lo, hi) for _ in range(3)))


# -- 1 -----------------------------------------------------------------------

CASE_LISTS = {
    1: ["a,b,c", "A,B,C"],
    2: ["a,b,gamma", "a,beta,c", "A,B,gamma", "A,beta,C", "alpha,b,c", "alpha,B,C"],
    3: ["a,A,beta", "a,A,gamma", "alpha,b,B", "alpha,c,C", "b,B,gamma", "beta,c,C"],
}


def test_criterion_01_triple_census():
    start = time.perf_counter()
    triples = compatible_triples()
    elapsed = time.perf_counter() - start
    expected = {parse_triple(s): case for case, names in CASE_LISTS.items() for s in names}
    ok = (len(triples) == 14 and set(triples) == set(expected)
          and all(t.case == expected[t] for t in triples) and elapsed < 1.0)
    report(1, ok, f"{len(triples)} triples, case lists match, {elapsed * 1e3:.1f} ms")


# -- 2 -----------------------------------------------------------------------

def test_criterion_02_pmf_sphere():
    cx = pmf_cell_complex()
    checks = cx.checks()
    ok = cx.counts == (9, 21, 14) and cx.euler_characteristic() == 2 and all(checks.values())
    failed = [k for k, v in checks.items() if not v]
    report(2, ok, f"(V,E,F)={cx.counts}, chi={cx.euler_characteristic()}, failed checks: {failed or 'none'}")


# -- 3 -----------------------------------------------------------------------

def _region_samples(rng, per_region):
    """(formula name, region label, chart coords) built inside each piece."""
    f = lambda: random_fraction(rng)  # noqa: E731
    pos = lambda: f() + Fraction(1, rng.randint(1, 24))  # noqa: E731
    abc, upper, alpha_bc = parse_triple("a,b,c"), parse_triple("A,B,C"), parse_triple("alpha,b,c")
    builders = {
        ("phi1", "b>=c"): lambda: (lambda c, d: (abc, (0, c + d, c)) if c + d > 0 else None)(f(), f()),
        ("phi1", "b<c"): lambda: (lambda b, d: (abc, (0, b, b + d)))(f(), pos()),
        ("phi2", "central"): lambda: _central(f),
        ("phi2", "b-dominant"): lambda: (lambda a, c, d: (abc, (a, a + c + d, c)))(f(), f(), pos()),
        ("phi2", "c-dominant"): lambda: (lambda a, b, d: (abc, (a, b, a + b + d)))(f(), f(), pos()),
        ("phi3", "a>=b+c"): lambda: (lambda b, c, d: (abc, (b + c + d, b, c)))(f(), f(), pos()),
        ("phi4", "alpha>=c"): lambda: (lambda b, c, d: (alpha_bc, (c + d, b, c)))(f(), f(), pos()),
        ("phi5", "C>=B"): lambda: (lambda B, d: (upper, (0, B, B + d)))(f(), pos()),
        ("phi5", "C<B"): lambda: (lambda C, d: (upper, (0, C + d, C)))(f(), pos()),
    }
    for (name, label), build in builders.items():
        count = 0
        while count < per_region:
            sample = build()
            if sample is None:
                continue
            count += 1
            yield name, label, ChartCoords(*sample)


def _central(f):
    a, b, c = f(), f(), f()
    if a + b + c == 0 or a > b + c or phi2_region(a, b, c) != 1:
        return None
    return parse_triple("a,b,c"), (a, b, c)


def test_criterion_03_pl_formulas():
    rng = random.Random(3)
    counts, mismatches = {}, 0
    for name, label, cc in _region_samples(rng, 1000):
        fn, _, target = FORMULAS[name]
        if fn(cc) != pl_transition(cc, target):
            mismatches += 1
        counts[(name, label)] = counts.get((name, label), 0) + 1
    ok = mismatches == 0 and len(counts) == 9 and min(counts.values()) >= 1000
    report(3, ok, f"{sum(counts.values())} exact samples over {len(counts)} pieces of phi1-phi5, "
                  f"{mismatches} mismatches")


# -- 4 -----------------------------------------------------------------------

def _random_foliation(rng):
    while True:
        k = rng.randint(1, 3)
        support = rng.sample(ARCS, k)
        weights = {x: random_fraction(rng, 10, 12) + Fraction(1, 12) for x in support}
        try:
            return FoliationClass(weights)
        except ValueError:
            continue


def test_criterion_04_roundtrip_and_cocycle():
    rng = random.Random(4)
    roundtrip_bad = cocycle_bad = compositions = 0
    n = 1000
    for _ in range(n):
        F = _random_foliation(rng)
        charts = charts_containing(F)
        for t in charts:
            cc = to_chart(F, t)
            if from_chart(cc) != F or to_chart(from_chart(cc), t) != cc:
                roundtrip_bad += 1
        for _ in range(3):
            t1, t2, t3 = (rng.choice(charts) for _ in range(3))
            c1 = to_chart(F, t1)
            compositions += 1
            if pl_transition(pl_transition(c1, t2), t3) != pl_transition(c1, t3):
                cocycle_bad += 1
    ok = roundtrip_bad == 0 and cocycle_bad == 0
    report(4, ok, f"{n} foliations, {compositions} three-chart compositions, "
                  f"{roundtrip_bad} round-trip and {cocycle_bad} cocycle failures")


# -- 5 -----------------------------------------------------------------------

def test_criterion_05_master_roundtrip():
    rng = random.Random(5)
    triples = compatible_triples()
    worst = 0.0
    start = time.perf_counter()
    for _ in range(1000):
        h = random_hexagon(rng)
        for t in triples:
            again = solve_from_triple(t, *(h.length(x) for x in t))
            worst = max(worst, max(rel(again.length(x), h.length(x)) for x in ARCS))
    elapsed = time.perf_counter() - start
    ok = worst < 1e-8 and elapsed < 10.0
    report(5, ok, f"1000 hexagons x 14 triples, worst relative error {worst:.2e}, {elapsed:.2f} s")


# -- 6 -----------------------------------------------------------------------

def test_criterion_06_trig_identities():
    rng = random.Random(5)
    worst_sines = worst_perp = 0.0
    for _ in range(1000):
        h = random_hexagon(rng)
        worst_sines = max(worst_sines, h.residuals()["sines"])
        for (alpha, b, C, c, B) in (
            (h.alpha, h.b, h.C, h.c, h.B),
            (h.beta, h.c, h.A, h.a, h.C),
            (h.gamma, h.a, h.B, h.b, h.A),
        ):
            lhs = math.cosh(alpha)
            worst_perp = max(worst_perp, rel(math.sinh(b) * math.sinh(C), lhs),
                             rel(math.sinh(c) * math.sinh(B), lhs))
    s = math.acosh(2)
    reg = solve_from_alternating(s, s, s)
    fixed = max(max(abs(x - s) for x in reg.sides), max(abs(x - math.acosh(3)) for x in reg.perpendiculars))
    ok = worst_sines < 1e-10 and worst_perp < 1e-10 and fixed < 1e-12
    report(6, ok, f"sines residual {worst_sines:.1e}, perpendicular relation {worst_perp:.1e}, "
                  f"regular fixed point {fixed:.1e}")


# -- 7 -----------------------------------------------------------------------

def test_criterion_07_no_homothety():
    rng = random.Random(7)
    grid = [0.5 + 0.25 * k for k in range(15)]  # 0.5 .. 4
    not_decreasing = kernel_bad = 0
    for _ in range(100):
        # labelled so that c is the shortest of the three alternating sides
        a, b, c = sorted((rng.uniform(0.2, 4) for _ in range(3)), reverse=True)
        values = [scaled_opposite(a, b, c, t) for t in grid]
        not_decreasing += any(x <= y for x, y in zip(values, values[1:]))
        kernel_bad += sum(scaling_kernel(a, b, c, t) >= 0 for t in grid)
    ok = not_decreasing == 0 and kernel_bad == 0
    report(7, ok, f"100 hexagons on t in [0.5, 4]: {not_decreasing} non-decreasing, "
                  f"{kernel_bad} kernel samples >= 0")


# -- 8 -----------------------------------------------------------------------

def test_criterion_08_asymptotics():
    failures = []
    small = 1e-3
    for b, c in itertools.product((0.01, 0.5, 1.0, 5.0, 20.0), repeat=2):
        h = solve_from_alternating(small, b, c)
        if not h.alpha > 5:
            failures.append(f"a=1e-3,b={b},c={c}: alpha={h.alpha:.3g}")
        if b <= 1 and not h.C > 5:
            failures.append(f"a=1e-3,b={b},c={c}: C={h.C:.3g}")
        # the same statement for a short upper side A
        up = solve_from_triple("A,B,C", small, b, c)
        if not up.alpha > 5:
            failures.append(f"A=1e-3,B={b},C={c}: alpha={up.alpha:.3g}")
    for b, c in itertools.product((0.5, 1.0, 2.0, 5.0, 20.0), (0.01, 0.5, 1.0)):
        C = opposite_side(20.0, b, c)
        if not C < 1e-3:
            failures.append(f"a=20,b={b},c={c}: C={C:.3g}")
    detail = f"{len(failures)} grid points violate the bounds"
    if failures:
        detail += "; e.g. " + ", ".join(failures[:3])
    report(8, not failures, detail)


# -- 9 -----------------------------------------------------------------------

WITNESSES = {
    "a=1/n; b=1/n; c=1/n": "A,B,C",
    "a=n; b=n; c=n": "a,b,c",
    "a=n; b=n; c=1": "a,b,gamma",
    "a=n; b=1; c=1": "a,A,gamma",
    "a=1; b=1; c=1/n": "A,B,gamma",
}


def test_criterion_09_divergence_table():
    wrong = []
    for seq, witness in WITNESSES.items():
        rep = diverges(SequenceSpec.parse(seq))
        if not (rep.diverges and rep.witness == parse_triple(witness)):
            wrong.append(seq)
    report(9, not wrong, f"{len(WITNESSES) - len(wrong)}/{len(WITNESSES)} asymptotic cases give the "
                         f"expected witness{'; wrong: ' + str(wrong) if wrong else ''}")


# -- 10 ----------------------------------------------------------------------

LIMITS = {
    "a=n; b=n; c=n": (1 / 3, 1 / 3, 1 / 3, 0, 0, 0),
    "a=1/n; b=1/n; c=1/n": (0, 0, 0, 1 / 3, 1 / 3, 1 / 3),
    "a=exp(n); b=n; c=n": (0.5, 0, 0, 0.5, 0, 0),
}


def test_criterion_10_boundary_limits():
    parts, ok = [], True
    for seq, expected in LIMITS.items():
        start = time.perf_counter()
        result = boundary_limit(SequenceSpec.parse(seq), n_max=40)
        elapsed = time.perf_counter() - start
        err = max(abs(x - y) for x, y in zip(result.limit.v, expected))
        ok &= err < 1e-3 and elapsed < 1.0
        parts.append(f"({seq}) err {err:.1e} in {elapsed:.2f} s")
    report(10, ok, "; ".join(parts))


# -- 11 ----------------------------------------------------------------------

def test_criterion_11_compactification():
    rng = random.Random(11)
    triples = compatible_triples()
    worst = 0.0
    q_bad = 0
    for _ in range(1000):
        t = rng.choice(triples)
        ls = [rng.uniform(0.2, 4) for _ in range(3)]
        p = teich_from_triple(t, *ls)
        point, collar = boundary_chart(p, t)
        back = reconstruct(point, collar)
        worst = max(worst, max(rel(back.length(x), p.length(x)) for x in ARCS))
        q = q_projection(p, t)
        q_bad += any(intersection_number(q, x) != Fraction(p.length(x)) for x in t)
    ok = worst < 1e-8 and q_bad == 0
    report(11, ok, f"1000 thick-part hexagons: reconstruction error {worst:.1e}, "
                   f"{q_bad} q-projection mismatches")


# -- 12 ----------------------------------------------------------------------

def test_criterion_12_embedding_separation():
    rng = random.Random(12)
    hex_bad = fol_bad = 0
    for _ in range(1000):
        h = teich_from_triple("a,b,c", *(math.exp(rng.uniform(-3, 3)) for _ in range(3)))
        hex_bad += not all(x > 0 for x in projective_embed(h).v)
        fol_bad += not any(x == 0 for x in projective_embed_f(_random_foliation(rng)).v)
    ok = hex_bad == 0 and fol_bad == 0
    report(12, ok, f"1000 hexagons ({hex_bad} with a zero entry), "
                   f"1000 foliations ({fol_bad} without one)")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
