import random
from fractions import Fraction
from pathlib import Path

import pytest
import sympy

from isochar.bichar import dimension_series, hc_bigraded_character
from isochar.budget import Budget
from isochar.errors import BudgetExceeded
from isochar.multipoly import MultiPoly
from isochar.rootsys import build_root_system
from isochar.schemeoracle import (
    IdealPresentation,
    bigraded_hilbert,
    buchberger,
    build_J,
    compare_scheme_vs_character,
    is_groebner,
    linear_algebra_hilbert,
)

DATA = Path(__file__).parent / "data"


def test_build_J_examples():
    gl1 = build_J("gl1")
    assert len(gl1.generators) == 2
    assert all(sum(g.lm) == 1 for g in gl1.generators)
    sl2 = build_J("sl2")
    assert sorted(sl2.bidegree(g) for g in sl2.generators) == sorted([(1, 1)] * 4 + [(2, 0), (0, 2)])
    gl2 = build_J("gl2")
    # [x, y] has trace zero, so its two diagonal entries agree up to sign
    assert len(gl2.generators) == 3 + 5
    assert gl2.nvars == 12
    with pytest.raises(ValueError):
        build_J("gl3")


def _random_matrix(rng, n=2):
    return [[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)] for _ in range(n)]


def _mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)] for i in range(2)]


def _inv(a):
    det = a[0][0] * a[1][1] - a[0][1] * a[1][0]
    return [[a[1][1] / det, -a[0][1] / det], [-a[1][0] / det, a[0][0] / det]]


@pytest.mark.parametrize("preset", ["sl2", "gl2"])
def test_trace_generators_conjugation_invariant(preset):
    p = build_J(preset)
    rng = random.Random(4)
    ncomm = 3
    for _ in range(10):
        x, y = _random_matrix(rng), _random_matrix(rng)
        if preset == "sl2":
            for m in (x, y):
                m[1][1] = -m[0][0]
        g = _random_matrix(rng)
        while g[0][0] * g[1][1] == g[0][1] * g[1][0]:
            g = _random_matrix(rng)
        gx, gy = (_mul(_mul(g, m), _inv(g)) for m in (x, y))
        t = [Fraction(rng.randint(-5, 5), 3) for _ in range(p.nvars)]

        def values(a, b):
            if preset == "sl2":
                return [a[0][0], a[0][1], a[1][0], b[0][0], b[0][1], b[1][0]] + t[6:8]
            return [a[0][0], a[0][1], a[1][0], a[1][1], b[0][0], b[0][1], b[1][0], b[1][1]] + t[8:12]

        for f in p.generators[ncomm:]:
            assert f.evaluate(values(x, y)) == f.evaluate(values(gx, gy))


def _mp(nvars, terms):
    return MultiPoly(nvars, terms)


def test_buchberger_examples():
    gl1 = build_J("gl1")
    gb = buchberger(gl1)
    assert sorted(g.terms.items() for g in gb.basis) == sorted(g.monic().terms.items() for g in gl1.generators)
    u2 = _mp(2, {(2, 0): 1})
    uv = _mp(2, {(1, 1): 1})
    p = IdealPresentation([("u", (1, 0)), ("v", (0, 1))], [u2, uv])
    gb = buchberger(p)
    assert {tuple(g.terms) for g in gb.basis} == {((2, 0),), ((1, 1),)}


def test_not_bihomogeneous():
    with pytest.raises(ValueError):
        IdealPresentation([("u", (1, 0)), ("v", (0, 1))], [_mp(2, {(1, 0): 1, (0, 1): 1})])


def _sympy_basis(p, polys):
    syms = sympy.symbols(p.names)

    def expr(g):
        return sum(
            sympy.Rational(c.numerator, c.denominator) * sympy.prod([s ** e for s, e in zip(syms, m)])
            for m, c in g.terms.items()
        )

    return syms, [expr(g) for g in polys]


@pytest.mark.parametrize("preset", ["gl1", "sl2", "gl2"])
def test_matches_sympy(preset):
    p = build_J(preset)
    gb = buchberger(p)
    syms, gens = _sympy_basis(p, p.generators)
    theirs = sympy.groebner(gens, *syms, order="grevlex")
    _, ours = _sympy_basis(p, gb.basis)


    def grevlex_monic(e):
        return sympy.expand(e / sympy.Poly(e, *syms).LC(order="grevlex"))

    assert {grevlex_monic(e) for e in theirs.exprs} == {sympy.expand(e) for e in ours}


def test_sl2_frozen_basis():
    gb = buchberger(build_J("sl2"))
    assert gb.to_text() == (DATA / "sl2_groebner.txt").read_text()
    assert is_groebner(gb.basis)
    lms = gb.leading_monomials()
    assert not any(a != b and all(x <= y for x, y in zip(a, b)) for a in lms for b in lms)


def test_is_groebner_detects_non_basis():
    assert not is_groebner(build_J("sl2").generators)


def test_buchberger_budget():
    with pytest.raises(BudgetExceeded):
        buchberger(build_J("sl2"), Budget(pairs=3))


def test_hilbert_examples():
    gl1 = build_J("gl1")
    hilb = bigraded_hilbert(buchberger(gl1), gl1.variables, 3, 3)
    assert set(hilb.values()) == {1}
    uv = IdealPresentation([("u", (1, 0)), ("v", (0, 1))], [_mp(2, {(1, 1): 1})])
    hilb = bigraded_hilbert(buchberger(uv), uv.variables, 3, 3)
    assert hilb == {(i, j): int(i == 0 or j == 0) for i in range(4) for j in range(4)}
    sl2 = build_J("sl2")
    assert bigraded_hilbert(buchberger(sl2), sl2.variables, 1, 1)[(1, 1)] == 12


def test_hilbert_budget():
    sl2 = build_J("sl2")
    with pytest.raises(BudgetExceeded):
        bigraded_hilbert(buchberger(sl2), sl2.variables, 3, 3, Budget(monomials=10))


def test_linear_algebra_oracle_gl2_small():
    p = build_J("gl2")
    assert bigraded_hilbert(buchberger(p), p.variables, 2, 2) == linear_algebra_hilbert(p, 2, 2)


def test_monotone_under_added_generator():
    p = build_J("sl2")
    base = bigraded_hilbert(buchberger(p), p.variables, 2, 2)
    a = MultiPoly.var(p.nvars, 0)
    t1 = MultiPoly.var(p.nvars, 6)
    bigger = IdealPresentation(p.variables, p.generators + [a * t1], "sl2+")
    more = bigraded_hilbert(buchberger(bigger), bigger.variables, 2, 2)
    assert all(more[ij] <= base[ij] for ij in base)
    assert more[(2, 0)] < base[(2, 0)]
    assert more == linear_algebra_hilbert(bigger, 2, 2)


def _dims(family, rank, I, J):
    return dimension_series(hc_bigraded_character(build_root_system(family, rank), I, J))


def test_compare_gl1():
    p = build_J("gl1")
    hilb = bigraded_hilbert(buchberger(p), p.variables, 3, 3)
    report = compare_scheme_vs_character(hilb, _dims("GL", 1, 3, 3), "gl1")
    assert report.ok and report.first_divergence is None
    assert all(row[4] == 0 for row in report.rows)


def test_compare_sl2():
    p = build_J("sl2")
    hilb = bigraded_hilbert(buchberger(p), p.variables, 2, 2)
    report = compare_scheme_vs_character(hilb, _dims("A", 1, 2, 2), "sl2")
    assert report.ok
    assert report.first_divergence == (1, 1)
    rows = {(r[0], r[1]): r[2:] for r in report.rows}
    assert rows[(1, 1)] == (12, 9, 3)
    assert rows[(1, 0)] == (4, 4, 0)
    assert report.to_csv().splitlines()[0] == "i,j,scheme_dim,xnorm_dim,gap"


def test_compare_flags_gl1_failure():
    hilb = {(0, 0): 1, (1, 0): 2}
    dims = {(0, 0): 1, (1, 0): 1}
    report = compare_scheme_vs_character(hilb, dims, "gl1")
    assert not report.ok and report.failures == [(1, 0)]
    with pytest.raises(ValueError):
        compare_scheme_vs_character(hilb, {(0, 0): 1}, "gl1")
