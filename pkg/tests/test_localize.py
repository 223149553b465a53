import random
from fractions import Fraction
from math import comb

import pytest

from conftest import W, rs_of
from isochar.bichar import BigradedCharacter, hc_bigraded_character
from isochar.charalg import VirtualCharacter
from isochar.errors import NonGenericPoint
from isochar.localize import (
    cartan_factor,
    cross_validate,
    generic_points,
    is_generic,
    localized_series,
    weyl_summand,
)
from isochar.weightlat import RationalPoint

OMEGA = W(Fraction(1, 2), Fraction(-1, 2))


def test_is_generic_examples(A1):
    assert not is_generic(A1, RationalPoint([3, 3]))
    assert is_generic(A1, RationalPoint([Fraction(2, 3), Fraction(3, 2)]))
    gl1 = rs_of("GL", 1)
    assert all(is_generic(gl1, RationalPoint([v])) for v in (1, -1, Fraction(5, 7)))


def test_gl1_modes():
    gl1 = rs_of("GL", 1)
    z = RationalPoint([Fraction(3, 5)])
    corrected = localized_series(gl1, z, 4, 4)
    assert set(corrected.coeffs.values()) == {1}
    printed = localized_series(gl1, z, 4, 4, mode="printed")
    assert printed[(0, 0)] == 1
    assert all(v == 0 for ij, v in printed.coeffs.items() if ij != (0, 0))


def test_a1_example(A1):
    z = RationalPoint([2, 1])
    assert localized_series(A1, z, 1, 1)[(1, 0)] == Fraction(9, 2)
    # weighting each summand by the sign of w does not reproduce the character
    assert localized_series(A1, z, 1, 1, literal_sign=True)[(1, 0)] == Fraction(15, 2)


@pytest.mark.parametrize("family,n", [("A", 2), ("B", 2)])
def test_factor_order_independence(family, n):
    rs = rs_of(family, n)
    (z,) = generic_points(rs, 1, seed=5)
    nfac = 3 * len(rs.positive_roots)
    rng = random.Random(0)
    for w in rs.weyl_group():
        order = list(range(nfac))
        rng.shuffle(order)
        assert weyl_summand(rs, w, z, 3, 3, order=order) == weyl_summand(rs, w, z, 3, 3)


@pytest.mark.parametrize("family,n", [("A", 1), ("A", 2), ("GL", 2)])
def test_printed_vs_corrected(family, n):
    rs = rs_of(family, n)
    r = rs.rank
    (z,) = generic_points(rs, 1, seed=2)
    I = J = 3
    pr = localized_series(rs, z, I, J, mode="printed")
    co = localized_series(rs, z, I, J)
    for i in range(I + 1):
        for j in range(J + 1):
            expected = sum(
                pr[(a, b)] * comb(i - a + r - 1, r - 1) * comb(j - b + r - 1, r - 1)
                for a in range(i + 1)
                for b in range(j + 1)
            )
            assert co[(i, j)] == expected


def test_cartan_factor_rank_zero():
    s = [[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]]
    assert cartan_factor([row[:] for row in s], 0) == s


def test_cross_validate_gl1():
    gl1 = rs_of("GL", 1)
    bc = hc_bigraded_character(gl1, 3, 3)
    assert cross_validate(bc, generic_points(gl1, 2, seed=0)).passed


def test_cross_validate_a1(A1):
    bc = hc_bigraded_character(A1, 4, 4)
    assert cross_validate(bc, generic_points(A1, 2, seed=1)).passed


def test_fault_injection(A1):
    bc = hc_bigraded_character(A1, 3, 3)
    coeffs = dict(bc.coeffs)
    coeffs[(2, 1)] = coeffs[(2, 1)] + VirtualCharacter.irreducible(A1, OMEGA * 2)
    bad = BigradedCharacter(A1, 3, 3, coeffs)
    report = cross_validate(bad, generic_points(A1, 2, seed=1))
    assert not report.passed
    assert report.bidegrees() == [(2, 1)]
    assert len(report.mismatches) == 2


def test_printed_mode_fails_validation():
    gl1 = rs_of("GL", 1)
    bc = hc_bigraded_character(gl1, 2, 2)
    report = cross_validate(bc, generic_points(gl1, 2, seed=0), mode="printed")
    assert (1, 0) in report.bidegrees() and (0, 0) not in report.bidegrees()


def test_errors(A1):
    with pytest.raises(NonGenericPoint):
        localized_series(A1, RationalPoint([2, 2]), 1, 1)
    with pytest.raises(NonGenericPoint):
        localized_series(A1, RationalPoint([2, 3, 5]), 1, 1)
    with pytest.raises(ValueError):
        localized_series(A1, RationalPoint([2, 1]), 1, 1, mode="verbatim")
    with pytest.raises(ValueError):
        localized_series(A1, RationalPoint([2, 1]), -1, 1)
    with pytest.raises(ValueError):
        cross_validate(hc_bigraded_character(A1, 1, 1), [])


def test_generic_points_reproducible(A2):
    pts = generic_points(A2, 3, seed=9)
    assert pts == generic_points(A2, 3, seed=9)
    assert len(set(pts)) == 3
    for z in pts:
        assert is_generic(A2, z)
        assert all(abs(v.numerator) <= 16 and v.denominator <= 16 for v in z.values)
