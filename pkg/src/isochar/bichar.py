"""Truncated bigraded character of the normalized isospectral commuting variety.

Every bidegree ``(i, j)`` is the finite alternating sum

    sum_n (-1)^n chi(Sym^{i-n} b* (x) Sym^{j-n} b* (x) Lambda^n [b,b]*)

of Euler characteristics of induced bundles on G/B, each evaluated with
Bott's algorithm weight by weight.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .budget import Budget
from .charalg import VirtualCharacter, bott_euler_poly, weyl_dim
from .errors import IsocharError
from .rootsys import RootSystem
from .weightlat import Weight, WeightPoly

CONVENTION = "Rplus=weights(g/b); b=negative-Borel"


class NegativeMultiplicity(IsocharError, ArithmeticError):
    """A coefficient that must be an honest character has a negative multiplicity."""


@dataclass(frozen=True)
class BorelWeightData:
    b_star_weights: tuple
    nil_star_weights: tuple

    @classmethod
    def of(cls, rs: RootSystem) -> "BorelWeightData":
        zero = Weight.zero(rs.dim)
        return cls((zero,) * rs.rank + rs.positive_roots, rs.positive_roots)

    @property
    def dim(self) -> int:
        w = self.b_star_weights or self.nil_star_weights
        return w[0].dim if w else 0


def _shift(p: WeightPoly, lam: Weight) -> WeightPoly:
    if lam.is_zero():
        return p
    return WeightPoly._raw(p.dim, {mu + lam: c for mu, c in p.terms.items()})


def sym_powers(weights, dim: int, top: int) -> list:
    """Characters of Sym^0 .. Sym^top of the space with the given weights."""
    out = [WeightPoly.constant(dim)] + [WeightPoly.zero(dim)] * top
    for lam in weights:
        # multiply the generating series by 1 / (1 - q e^lam)
        for k in range(1, top + 1):
            out[k] = out[k] + _shift(out[k - 1], lam)
    return out


def exterior_powers(weights, dim: int) -> list:
    """Characters of Lambda^0 .. Lambda^N."""
    n = len(weights)
    out = [WeightPoly.constant(dim)] + [WeightPoly.zero(dim)] * n
    for lam in weights:
        for k in range(n, 0, -1):
            out[k] = out[k] + _shift(out[k - 1], lam)
    return out


class _Pieces:
    """Cached Sym and Lambda characters for one root system."""

    def __init__(self, rs: RootSystem, top: int):
        data = BorelWeightData.of(rs)
        self.data = data
        self.sym = sym_powers(data.b_star_weights, rs.dim, top)
        self.ext = exterior_powers(data.nil_star_weights, rs.dim)


def graded_piece_weights(data: BorelWeightData, k: int, m: int, n: int) -> WeightPoly:
    """T-character of Sym^k b* (x) Sym^m b* (x) Lambda^n [b,b]*."""
    if min(k, m, n) < 0:
        raise ValueError("degrees must be nonnegative")
    if n > len(data.nil_star_weights):
        raise ValueError("exterior degree above dim [b,b]*")
    dim = data.dim
    sym = sym_powers(data.b_star_weights, dim, max(k, m))
    ext = exterior_powers(data.nil_star_weights, dim)
    return sym[k] * sym[m] * ext[n]


def bidegree_poly(pieces: _Pieces, i: int, j: int) -> WeightPoly:
    """The T-character whose Bott image is the (i, j) coefficient."""
    total = WeightPoly.zero(pieces.sym[0].dim)
    for n in range(min(i, j, len(pieces.ext) - 1) + 1):
        term = pieces.sym[i - n] * pieces.sym[j - n] * pieces.ext[n]
        total = total - term if n % 2 else total + term
    return total


@dataclass
class BigradedCharacter:
    rs: RootSystem
    I: int
    J: int
    coeffs: dict = field(default_factory=dict)

    @property
    def metadata(self) -> dict:
        return {
            "family": self.rs.family,
            "rank": self.rs.rank,
            "I": self.I,
            "J": self.J,
            "convention": CONVENTION,
        }

    def __getitem__(self, ij) -> VirtualCharacter:
        return self.coeffs[ij]

    def bidegrees(self):
        return [(i, j) for i in range(self.I + 1) for j in range(self.J + 1)]


def estimate_work(rs: RootSystem, I: int, J: int) -> int:
    """Crude upper bound on the term operations of :func:`hc_bigraded_character`."""
    npos = len(rs.positive_roots)
    m = max((abs(c) for g in rs.positive_roots for c in g.coords), default=0)

    def support(k):
        lattice = (2 * k * int(m) + 1) ** rs.dim
        return min(math.comb(k + npos, npos), lattice)

    total = 0
    for i in range(I + 1):
        for j in range(J + 1):
            for n in range(min(i, j, npos) + 1):
                total += support(i - n) * support(j - n) * math.comb(npos, n)
    return total


_worker_pieces: dict = {}


def _pieces_for(rs: RootSystem, top: int) -> _Pieces:
    key = (rs.key, top)
    p = _worker_pieces.get(key)
    if p is None:
        p = _worker_pieces[key] = _Pieces(rs, top)
    return p


def _coefficient(args):
    rs, top, i, j = args
    return (i, j), bott_euler_poly(rs, bidegree_poly(_pieces_for(rs, top), i, j))


def hc_bigraded_character(rs: RootSystem, I: int, J: int, jobs: int = 1, budget: Budget | None = None) -> BigradedCharacter:
    """Bigraded character on the box ``0 <= i <= I, 0 <= j <= J``."""
    if I < 0 or J < 0:
        raise ValueError("box dimensions must be nonnegative")
    budget = budget or rs.budget
    budget.check("weyl", rs.weyl_order)
    budget.check("work", estimate_work(rs, I, J))
    top = max(I, J)
    tasks = [(rs, top, i, j) for i in range(I + 1) for j in range(J + 1)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_coefficient, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = [_coefficient(t) for t in tasks]
    return BigradedCharacter(rs, I, J, dict(sorted(results, key=lambda r: r[0])))


def dimension_series(bc: BigradedCharacter) -> dict:
    """Dimension of every bidegree piece; refuses non-honest coefficients."""
    out = {}
    for ij in bc.bidegrees():
        ch = bc.coeffs[ij]
        bad = [mu for mu, c in ch.terms.items() if c < 0]
        if bad:
            raise NegativeMultiplicity(f"negative multiplicity at {ij}: {bad[0]!r}")
        out[ij] = sum(c * weyl_dim(bc.rs, mu) for mu, c in ch.terms.items())
    return out
