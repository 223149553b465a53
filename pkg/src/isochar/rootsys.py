"""Root systems in Bourbaki coordinates and Weyl group enumeration.

Realizations (ambient dimension d):

* ``GL`` n: R^n, roots e_i - e_j, reductive of rank n.
* ``A`` n: R^{n+1}, roots e_i - e_j, rank n.  Fundamental weights are taken in
  the trace-zero hyperplane; Weyl group action fixes the diagonal direction.
* ``B``/``C`` n in [2, 4], ``D`` n in [3, 4]: R^n, the standard lists.
* ``G2``: the trace-zero plane in R^3 with simple roots e1 - e2 and
  -2e1 + e2 + e3.

Positive roots are the standard ones; for the Borel used by the character
computation this means the weights of g/b coincide with R+.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple

import numpy as np

from . import _kernels
from ._linalg import inverse, solve
from .budget import Budget, default_budget
from .errors import BudgetExceeded, UnsupportedRootSystem
from .weightlat import Weight

FAMILIES = ("GL", "A", "B", "C", "D", "G2")

Matrix = tuple  # tuple of row tuples of Fraction


def _unit(d, i, c=1):
    v = [0] * d
    v[i] = c
    return v


def _simple_roots(family: str, n: int):
    if family in ("GL", "A"):
        d = n if family == "GL" else n + 1
        return d, [[int(k == i) - int(k == i + 1) for k in range(d)] for i in range(d - 1)]
    if family in ("B", "C", "D"):
        base = [[int(k == i) - int(k == i + 1) for k in range(n)] for i in range(n - 1)]
        if family == "B":
            last = _unit(n, n - 1)
        elif family == "C":
            last = _unit(n, n - 1, 2)
        else:
            last = [0] * n
            last[n - 2] = last[n - 1] = 1
        return n, base + [last]
    if family == "G2":
        return 3, [[1, -1, 0], [-2, 1, 1]]
    raise UnsupportedRootSystem(family)


def weyl_order(family: str, n: int) -> int:
    """|W| by the closed formula, used for the size guard before enumeration."""
    if family == "GL":
        return math.factorial(n)
    if family == "A":
        return math.factorial(n + 1)
    if family in ("B", "C"):
        return 2**n * math.factorial(n)
    if family == "D":
        return 2 ** (n - 1) * math.factorial(n)
    if family == "G2":
        return 12
    raise UnsupportedRootSystem(family)


def _check_supported(family: str, rank: int) -> None:
    ok = {
        "GL": rank >= 1,
        "A": rank >= 1,
        "B": 2 <= rank <= 4,
        "C": 2 <= rank <= 4,
        "D": 3 <= rank <= 4,
        "G2": rank == 2,
    }
    if family not in ok or not ok[family]:
        raise UnsupportedRootSystem(f"unsupported root system {family}{rank}")


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(n)), Fraction(0)) for j in range(n))
        for i in range(n)
    )


def _identity(d: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(d)) for i in range(d))


def _reflection(alpha: Weight) -> Matrix:
    d = alpha.dim
    nrm = alpha.dot(alpha)
    a = alpha.coords
    return tuple(tuple(Fraction(int(i == j)) - 2 * a[i] * a[j] / nrm for j in range(d)) for i in range(d))


@dataclass(frozen=True, eq=False)
class WeylElement:
    """A Weyl group element acting on the ambient space by an exact matrix."""

    matrix: Matrix
    length: int
    word: tuple = ()

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    @cached_property
    def _int_matrix(self):
        den = 1
        for row in self.matrix:
            for v in row:
                den = den * v.denominator // math.gcd(den, v.denominator)
        num = np.array([[int(v * den) for v in row] for row in self.matrix], dtype=np.int64)
        return num, den

    def apply(self, lam: Weight) -> Weight:
        c = lam.coords
        return Weight(sum((m * x for m, x in zip(row, c)), Fraction(0)) for row in self.matrix)

    def __call__(self, lam: Weight) -> Weight:
        return self.apply(lam)

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        w = "".join(f"s{i + 1}" for i in self.word) or "id"
        return f"WeylElement({w}, length={self.length})"


class DominantConjugate(NamedTuple):
    regular: bool
    w: WeylElement | None
    mu: Weight | None


@dataclass(frozen=True, eq=False)
class RootSystem:
    family: str
    rank: int
    dim: int
    simple_roots: tuple
    positive_roots: tuple
    rho: Weight
    budget: Budget = field(default_factory=default_budget, repr=False)

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}" if self.family != "G2" else "G2"

    @property
    def semisimple_rank(self) -> int:
        return len(self.simple_roots)

    @property
    def key(self):
        return (self.family, self.rank)

    def __eq__(self, other) -> bool:
        return isinstance(other, RootSystem) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __reduce__(self):
        return (build_root_system, (self.family, self.rank, self.budget))

    # pairings -------------------------------------------------------------

    def coroot_pairing(self, lam: Weight, gamma: Weight) -> Fraction:
        """<lam, gamma^vee> = 2 (lam, gamma) / (gamma, gamma)."""
        return 2 * lam.dot(gamma) / gamma.dot(gamma)

    def is_dominant(self, lam: Weight) -> bool:
        return all(self.coroot_pairing(lam, a) >= 0 for a in self.simple_roots)

    def is_regular(self, lam: Weight) -> bool:
        return all(self.coroot_pairing(lam, g) != 0 for g in self.positive_roots)

    @cached_property
    def roots(self) -> tuple:
        return self.positive_roots + tuple(-g for g in self.positive_roots)

    @cached_property
    def _root_set(self) -> frozenset:
        return frozenset(self.roots)

    def simple_coordinates(self, lam: Weight):
        """Coefficients of lam in the simple-root basis, or None if outside their span."""
        if not self.simple_roots:
            return [] if lam.is_zero() else None
        return solve([a.coords for a in self.simple_roots], lam.coords)

    @cached_property
    def cartan_matrix(self):
        s = self.simple_roots
        return [[int(self.coroot_pairing(a, b)) for b in s] for a in s]

    @cached_property
    def fundamental_weights(self) -> tuple:
        """Weights with <omega_i, alpha_j^vee> = delta_ij.

        For GL these are e_1 + ... + e_i; otherwise they lie in the span of
        the roots.
        """
        r = self.semisimple_rank
        if self.family == "GL":
            return tuple(Weight([1] * (i + 1) + [0] * (self.dim - i - 1)) for i in range(r))
        cinv = inverse(self.cartan_matrix)
        out = []
        for i in range(r):
            v = Weight.zero(self.dim)
            for j in range(r):
                if cinv[i][j]:
                    v = v + self.simple_roots[j] * cinv[i][j]
            out.append(v)
        return tuple(out)

    def from_fundamental(self, coeffs) -> Weight:
        v = Weight.zero(self.dim)
        for c, om in zip(coeffs, self.fundamental_weights, strict=True):
            if c:
                v = v + om * c
        return v

    def in_root_lattice(self, lam: Weight) -> bool:
        c = self.simple_coordinates(lam)
        return c is not None and all(x.denominator == 1 for x in c)

    # Weyl group -----------------------------------------------------------

    @cached_property
    def simple_reflections(self) -> tuple:
        return tuple(_reflection(a) for a in self.simple_roots)

    @property
    def weyl_order(self) -> int:
        return weyl_order(self.family, self.rank)

    @cached_property
    def _weyl(self) -> tuple:
        self.budget.check("weyl", self.weyl_order)
        d = self.dim
        ident = WeylElement(_identity(d), 0, ())
        out = [ident]
        seen = {ident.matrix}
        level = [ident]
        length = 0
        refl = self.simple_reflections
        while level:
            length += 1
            nxt = []
            for w in level:
                for i, s in enumerate(refl):
                    m = _matmul(w.matrix, s)
                    if m in seen:
                        continue
                    seen.add(m)
                    nxt.append(WeylElement(m, length, w.word + (i,)))
            out.extend(nxt)
            level = nxt
        if len(out) != self.weyl_order:  # pragma: no cover - structural check
            raise RuntimeError(f"enumerated {len(out)} elements, expected {self.weyl_order}")
        return tuple(out)

    def weyl_group(self) -> tuple:
        return self._weyl

    @cached_property
    def _by_matrix(self) -> dict:
        return {w.matrix: w for w in self._weyl}

    def compose(self, a: WeylElement, b: WeylElement) -> WeylElement:
        """The element a*b (apply b first)."""
        return self._by_matrix[_matmul(a.matrix, b.matrix)]

    def inverse(self, a: WeylElement) -> WeylElement:
        m = tuple(zip(*a.matrix))
        return self._by_matrix[m]

    def element_from_word(self, word) -> WeylElement:
        """s_{word[0]} s_{word[1]} ... as an element of the cached group."""
        m = _identity(self.dim)
        for i in word:
            m = _matmul(m, self.simple_reflections[i])
        return self._by_matrix[m]

    def inversion_count(self, w: WeylElement) -> int:
        pos = set(self.positive_roots)
        return sum(1 for g in self.positive_roots if w.apply(g) not in pos)

    # dominance ------------------------------------------------------------

    def dominant_conjugate(self, lam: Weight) -> DominantConjugate:
        """Move lam into the dominant chamber by simple reflections.

        Returns ``(False, None, None)`` when lam lies on a wall.
        """
        if not self.is_regular(lam):
            return DominantConjugate(False, None, None)
        x = lam
        steps = []
        while True:
            for i, a in enumerate(self.simple_roots):
                p = self.coroot_pairing(x, a)
                if p < 0:
                    x = x - a * p
                    steps.append(i)
                    break
            else:
                break
        m = _identity(self.dim)
        for i in steps:
            m = _matmul(self.simple_reflections[i], m)
        w = WeylElement(m, len(steps), tuple(reversed(steps)))
        return DominantConjugate(True, w, x)

    def dominant_form(self, lam: Weight) -> Weight:
        """The dominant W-conjugate of lam (walls allowed)."""
        x = lam
        while True:
            for a in self.simple_roots:
                p = self.coroot_pairing(x, a)
                if p < 0:
                    x = x - a * p
                    break
            else:
                return x

    @cached_property
    def _kernel_roots(self):
        simple = np.array([[int(c) for c in a.coords] for a in self.simple_roots], dtype=np.int64).reshape(-1, self.dim)
        norm2 = np.array([int(a.dot(a)) for a in self.simple_roots], dtype=np.int64)
        return simple, norm2

    def dominant_many(self, weights) -> list:
        """Batch ``dominant_form`` plus chamber data.

        Returns one ``(mu, length, on_wall)`` triple per input.  ``length`` is
        the number of simple reflections used, which is the length of the
        minimal Weyl element carrying the weight into the dominant chamber.
        Uses the integer kernels when the batch fits, else exact fallback.
        """
        weights = list(weights)
        if not weights:
            return []
        simple, norm2 = self._kernel_roots
        scale, rows = scaled_rows(weights)
        integral = all(
            (2 * sum(r * s for r, s in zip(row, simple_row))) % int(n2) == 0
            for row in rows
            for simple_row, n2 in zip(simple.tolist(), norm2.tolist())
        )
        if integral and _kernels.fits_int64(rows, simple):
            arr = np.array(rows, dtype=np.int64).reshape(len(rows), self.dim)
            dom, length, wall = _kernels.reflect_to_dominant(arr, simple, norm2)
            return [
                (Weight(Fraction(int(v), scale) for v in dom[k]), int(length[k]), bool(wall[k]))
                for k in range(len(weights))
            ]
        out = []
        for lam in weights:
            x, n = lam, 0
            while True:
                for a in self.simple_roots:
                    p = self.coroot_pairing(x, a)
                    if p < 0:
                        x = x - a * p
                        n += 1
                        break
                else:
                    break
            out.append((x, n, any(self.coroot_pairing(x, a) == 0 for a in self.simple_roots)))
        return out

    def act_many(self, w: WeylElement, weights) -> list:
        """Images of many weights under w, through the integer kernel when possible."""
        weights = list(weights)
        if not weights:
            return []
        scale, rows = scaled_rows(weights)
        if _kernels.fits_int64(rows, w._int_matrix[0]):
            arr = np.array(rows, dtype=np.int64).reshape(len(rows), self.dim)
            out = self.act_rows(w, arr)
            if out is not None:
                return [Weight(Fraction(int(v), scale) for v in row) for row in out]
        return [w.apply(lam) for lam in weights]

    def act_rows(self, w: WeylElement, arr):
        """Kernel action on an int64 array of scaled weights; None if it leaves the lattice."""
        num, den = w._int_matrix
        try:
            return _kernels.apply_matrix(num, den, arr)
        except ValueError:
            return None

    def orbit(self, lam: Weight) -> list:
        """The W-orbit of lam, sorted."""
        seen = {lam}
        frontier = [lam]
        while frontier:
            nxt = []
            for x in frontier:
                for a in self.simple_roots:
                    p = self.coroot_pairing(x, a)
                    if p:
                        y = x - a * p
                        if y not in seen:
                            seen.add(y)
                            nxt.append(y)
            frontier = nxt
        return sorted(seen)


def scaled_rows(weights) -> tuple:
    """Common denominator D and the integer rows D * lam."""
    scale = 1
    for lam in weights:
        for c in lam.coords:
            scale = scale * c.denominator // math.gcd(scale, c.denominator)
    return scale, [[int(c * scale) for c in lam.coords] for lam in weights]


def build_root_system(family: str, rank: int, budget: Budget | None = None) -> RootSystem:
    """Construct the root system of the given family and rank."""
    family = family.upper()
    if family == "G":
        family = "G2"
    _check_supported(family, rank)
    budget = budget or default_budget()
    guard_weyl(family, rank, budget)
    d, simple_raw = _simple_roots(family, rank)
    simple = tuple(Weight(a) for a in simple_raw)

    # close the simple roots under simple reflections
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for x in frontier:
            for a in simple:
                p = 2 * x.dot(a) / a.dot(a)
                y = x - a * p
                if y not in roots:
                    roots.add(y)
                    nxt.append(y)
        frontier = nxt
    positive = []
    for g in roots:
        c = solve([a.coords for a in simple], g.coords)
        if all(x >= 0 for x in c):
            positive.append((sum(c), g))
    positive.sort(key=lambda t: (t[0], tuple(-x for x in t[1].coords)))
    pos = tuple(g for _, g in positive)

    rho = Weight.zero(d)
    for g in pos:
        rho = rho + g
    rho = rho * Fraction(1, 2)
    return RootSystem(family, rank, d, simple, pos, rho, budget)


def guard_weyl(family: str, rank: int, budget: Budget) -> None:
    n = weyl_order(family, rank)
    if n > budget.weyl:
        raise BudgetExceeded(f"|W| = {n} exceeds the Weyl guard {budget.weyl}")
