from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import W, rs_of
from isochar.budget import Budget
from isochar.errors import BudgetExceeded, UnsupportedRootSystem
from isochar.rootsys import build_root_system

SUPPORTED = [("GL", 1), ("GL", 2), ("GL", 3), ("A", 1), ("A", 2), ("A", 3),
             ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 3), ("D", 4), ("G2", 2)]


def expected_npos(family, n):
    return {
        "GL": n * (n - 1) // 2,
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "G2": 6,
    }[family]


def test_build_examples():
    gl1 = rs_of("GL", 1)
    assert gl1.dim == 1 and gl1.positive_roots == () and len(gl1.weyl_group()) == 1
    a1 = rs_of("A", 1)
    (alpha,) = a1.positive_roots
    assert a1.rho == alpha * Fraction(1, 2)
    assert len(a1.weyl_group()) == 2
    a2 = rs_of("A", 2)
    assert len(a2.positive_roots) == 3 and len(a2.weyl_group()) == 6


@pytest.mark.parametrize("family,n", [("E", 6), ("B", 5), ("D", 2), ("A", 0), ("C", 1)])
def test_unsupported(family, n):
    with pytest.raises(UnsupportedRootSystem):
        build_root_system(family, n)


def test_weyl_guard():
    with pytest.raises(BudgetExceeded):
        build_root_system("A", 8, Budget(weyl=1000))


@pytest.mark.parametrize("family,n", SUPPORTED)
def test_root_system_invariants(family, n):
    rs = rs_of(family, n)
    assert len(rs.positive_roots) == expected_npos(family, n)
    for g in rs.positive_roots:
        c = rs.simple_coordinates(g)
        assert c is not None and all(x >= 0 and x.denominator == 1 for x in c)
    for a in rs.simple_roots:
        assert rs.coroot_pairing(rs.rho, a) == 1
    half = sum((g for g in rs.positive_roots), W(*[0] * rs.dim)) * Fraction(1, 2)
    assert rs.rho == half


@pytest.mark.parametrize("family,n", SUPPORTED)
def test_weyl_group_lengths(family, n):
    rs = rs_of(family, n)
    group = rs.weyl_group()
    assert len(group) == rs.weyl_order
    assert len({w.matrix for w in group}) == len(group)
    roots = set(rs.roots)
    for w in group:
        assert rs.inversion_count(w) == w.length == len(w.word)
        assert w.sign == (-1) ** w.length
        assert {w.apply(g) for g in rs.roots} == roots
    lengths = [w.length for w in group]
    assert lengths == sorted(lengths)


def test_weyl_examples():
    assert sorted(w.length for w in rs_of("A", 1).weyl_group()) == [0, 1]
    assert sorted(w.length for w in rs_of("A", 2).weyl_group()) == [0, 1, 1, 2, 2, 3]


def test_weyl_tie_order_is_lexicographic():
    for family, n in SUPPORTED:
        group = rs_of(family, n).weyl_group()
        keys = [(w.length, w.word) for w in group]
        assert keys == sorted(keys)


def poly_product(degrees):
    out = [1]
    for d in degrees:
        new = [0] * (len(out) + d - 1)
        for i, c in enumerate(out):
            for k in range(d):
                new[i + k] += c
        out = new
    return out


@pytest.mark.parametrize("family,n,degrees", [
    ("A", 1, [2]), ("A", 2, [2, 3]), ("B", 2, [2, 4]), ("G2", 2, [2, 6]),
])
def test_poincare_polynomial(family, n, degrees):
    counts = Counter(w.length for w in rs_of(family, n).weyl_group())
    series = [counts[k] for k in range(max(counts) + 1)]
    assert series == poly_product(degrees)


def test_dominant_conjugate_examples(A1):
    dc = A1.dominant_conjugate(A1.rho)
    assert dc.regular and dc.w.length == 0 and dc.mu == A1.rho
    dc = A1.dominant_conjugate(-A1.rho)
    assert dc.regular and dc.w.length == 1 and dc.mu == A1.rho
    assert not A1.dominant_conjugate(W(0, 0)).regular


@pytest.mark.parametrize("family,n", [("A", 2), ("B", 2), ("C", 3), ("G2", 2), ("GL", 3)])
@given(data=st.data())
def test_dominant_conjugate_property(family, n, data):
    rs = rs_of(family, n)
    coeffs = data.draw(st.lists(st.integers(-4, 4), min_size=rs.semisimple_rank, max_size=rs.semisimple_rank))
    lam = rs.from_fundamental(coeffs)
    if rs.family == "GL":
        lam = lam + W(*data.draw(st.lists(st.integers(-2, 2), min_size=rs.dim, max_size=rs.dim)))
    dc = rs.dominant_conjugate(lam)
    singular = any(rs.coroot_pairing(lam, g) == 0 for g in rs.positive_roots)
    assert dc.regular == (not singular)
    if dc.regular:
        assert dc.w.apply(lam) == dc.mu
        assert all(rs.coroot_pairing(dc.mu, g) > 0 for g in rs.positive_roots)
        assert rs.inversion_count(dc.w) == dc.w.length


def test_group_operations():
    rs = rs_of("B", 3)
    group = rs.weyl_group()
    for w in group[::7]:
        assert rs.compose(w, rs.inverse(w)) == group[0]
        assert rs.element_from_word(w.word) == w


def test_fundamental_weights():
    for family, n in SUPPORTED:
        rs = rs_of(family, n)
        for i, om in enumerate(rs.fundamental_weights):
            assert [rs.coroot_pairing(om, a) for a in rs.simple_roots] == [int(k == i) for k in range(rs.semisimple_rank)]


def test_orbit_size(A2):
    assert len(A2.orbit(A2.rho)) == 6
    assert len(A2.orbit(A2.fundamental_weights[0])) == 3
