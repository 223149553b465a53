"""Fixed-point localization over the Weyl group, specialized at rational points.

For each w in W the local contribution

    prod_a (1 - q1 q2 e^{wa}) / [prod_b (1 - q1 e^{wb}) (1 - q2 e^{wb}) prod_c (1 - e^{-wc})]

(a, b, c over R+) is evaluated at a point z and expanded as an exact power
series in (q1, q2) truncated to the box.  ``corrected`` mode multiplies the
sum by the Cartan factor ``(1 - q1)^-r (1 - q2)^-r`` coming from the zero
weights of b*; ``printed`` mode omits it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .bichar import CONVENTION, BigradedCharacter
from .errors import NonGenericPoint
from .rootsys import RootSystem
from .weightlat import RationalPoint, wp_eval

MODES = ("corrected", "printed")


def is_generic(rs: RootSystem, z: RationalPoint) -> bool:
    """True iff no root exponential evaluates to 1 at z."""
    if z.dim != rs.dim:
        return False
    return all(z.monomial(g) != 1 for g in rs.positive_roots)


def _check_point(rs: RootSystem, z: RationalPoint) -> None:
    if z.dim != rs.dim:
        raise NonGenericPoint(f"point of dimension {z.dim} for {rs.name} (ambient {rs.dim})")
    if not is_generic(rs, z):
        raise NonGenericPoint(f"{z!r} lies on a wall of {rs.name}")


def generic_points(rs: RootSystem, count: int, seed: int, height: int = 16) -> list:
    """Reproducible generic points with numerators and denominators <= height."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        z = RationalPoint(
            Fraction(rng.randint(1, height), rng.randint(1, height)) * rng.choice((1, -1))
            for _ in range(rs.dim)
        )
        if is_generic(rs, z) and z not in out:
            out.append(z)
    return out


# truncated bivariate series as (I+1) x (J+1) lists ---------------------------


def _series_const(I, J, c):
    s = [[Fraction(0)] * (J + 1) for _ in range(I + 1)]
    s[0][0] = Fraction(c)
    return s


def _mul_geometric_q1(s, a):
    # s * 1 / (1 - a q1)
    for i in range(1, len(s)):
        prev, row = s[i - 1], s[i]
        for j in range(len(row)):
            row[j] += a * prev[j]


def _mul_geometric_q2(s, a):
    for row in s:
        for j in range(1, len(row)):
            row[j] += a * row[j - 1]


def _mul_one_minus_q1q2(s, a):
    # s * (1 - a q1 q2)
    for i in range(len(s) - 1, 0, -1):
        prev, row = s[i - 1], s[i]
        for j in range(len(row) - 1, 0, -1):
            row[j] -= a * prev[j - 1]


def _add_into(acc, s):
    for ra, rs_ in zip(acc, s):
        for j in range(len(ra)):
            ra[j] += rs_[j]


def weyl_summand(rs: RootSystem, w, z: RationalPoint, I: int, J: int, order=None) -> list:
    """Series of the local contribution at the fixed point w (no Cartan factor).

    ``order`` optionally permutes the list of factors; the result is the same.
    """
    vals = [z.monomial(w.apply(g)) for g in rs.positive_roots]
    const = Fraction(1)
    for a in vals:
        const /= 1 - 1 / a
    factors = [("num", a) for a in vals] + [("q1", a) for a in vals] + [("q2", a) for a in vals]
    if order is not None:
        factors = [factors[k] for k in order]
    s = _series_const(I, J, const)
    for kind, a in factors:
        if kind == "num":
            _mul_one_minus_q1q2(s, a)
        elif kind == "q1":
            _mul_geometric_q1(s, a)
        else:
            _mul_geometric_q2(s, a)
    return s


def cartan_factor(s: list, rank: int) -> list:
    """Multiply a series by (1 - q1)^-rank (1 - q2)^-rank in place."""
    one = Fraction(1)
    for _ in range(rank):
        _mul_geometric_q1(s, one)
        _mul_geometric_q2(s, one)
    return s


@dataclass
class LocalizedSeries:
    rs: RootSystem
    point: RationalPoint
    I: int
    J: int
    mode: str
    coeffs: dict = field(default_factory=dict)

    @property
    def metadata(self) -> dict:
        return {
            "family": self.rs.family,
            "rank": self.rs.rank,
            "I": self.I,
            "J": self.J,
            "mode": self.mode,
            "convention": CONVENTION,
        }

    def __getitem__(self, ij) -> Fraction:
        return self.coeffs[ij]


def localized_series(
    rs: RootSystem,
    z: RationalPoint,
    I: int,
    J: int,
    mode: str = "corrected",
    literal_sign: bool = False,
) -> LocalizedSeries:
    """Sum of the Weyl-group local contributions at z, truncated to the box.

    ``literal_sign`` additionally weights each summand by (-1)^l(w); this is
    not consistent with the localization denominators and exists only to
    show that the unsigned sum is the one matching the Bott computation.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if I < 0 or J < 0:
        raise ValueError("box dimensions must be nonnegative")
    _check_point(rs, z)
    acc = _series_const(I, J, 0)
    for w in rs.weyl_group():
        s = weyl_summand(rs, w, z, I, J)
        if literal_sign and w.length % 2:
            s = [[-x for x in row] for row in s]
        _add_into(acc, s)
    if mode == "corrected":
        cartan_factor(acc, rs.rank)
    coeffs = {(i, j): acc[i][j] for i in range(I + 1) for j in range(J + 1)}
    return LocalizedSeries(rs, z, I, J, mode, coeffs)


@dataclass
class Mismatch:
    point: RationalPoint
    i: int
    j: int
    character_value: Fraction
    localized_value: Fraction


@dataclass
class ValidationReport:
    points: list
    mode: str
    mismatches: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def bidegrees(self) -> list:
        return sorted({(m.i, m.j) for m in self.mismatches})


def cross_validate(bc: BigradedCharacter, points, mode: str = "corrected") -> ValidationReport:
    """Compare Algorithm A's coefficients with localization at every point."""
    points = list(points)
    if not points:
        raise ValueError("at least one point is required")
    for z in points:
        _check_point(bc.rs, z)
    expanded = {ij: bc.coeffs[ij].expand() for ij in bc.bidegrees()}
    report = ValidationReport(points, mode)
    for z in points:
        loc = localized_series(bc.rs, z, bc.I, bc.J, mode)
        for ij in bc.bidegrees():
            a = wp_eval(expanded[ij], z)
            b = loc.coeffs[ij]
            if a != b:
                report.mismatches.append(Mismatch(z, ij[0], ij[1], a, b))
    return report
