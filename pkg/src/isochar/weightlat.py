"""Exact weight-lattice arithmetic and the group algebra Z[lattice].

A :class:`Weight` is a vector of exact rationals in the ambient space of a
root system realization.  A :class:`WeightPoly` is a finite sum
``sum c_lam e^lam`` with integer coefficients; multiplication is
``e^lam * e^mu = e^(lam + mu)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import DimensionMismatch, NonIntegralExponent


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floating point coordinates are not allowed")
    return Fraction(x)


class Weight:
    """An immutable point of the ambient lattice with rational coordinates."""

    __slots__ = ("coords", "_hash")

    def __init__(self, coords: Iterable):
        c = tuple(_frac(x) for x in coords)
        object.__setattr__(self, "coords", c)
        object.__setattr__(self, "_hash", hash(c))

    def __setattr__(self, name, value):
        raise AttributeError("Weight is immutable")

    def __reduce__(self):
        return (Weight, (self.coords,))

    @classmethod
    def zero(cls, dim: int) -> "Weight":
        return cls((0,) * dim)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def _check(self, other: "Weight") -> None:
        if len(other.coords) != len(self.coords):
            raise DimensionMismatch(f"weights of dimension {self.dim} and {other.dim}")

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "Weight":
        return Weight(-a for a in self.coords)

    def __mul__(self, k) -> "Weight":
        k = _frac(k)
        return Weight(k * a for a in self.coords)

    __rmul__ = __mul__

    def dot(self, other: "Weight") -> Fraction:
        self._check(other)
        return sum((a * b for a, b in zip(self.coords, other.coords)), Fraction(0))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __eq__(self, other) -> bool:
        return isinstance(other, Weight) and self.coords == other.coords

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Weight") -> bool:
        return self.coords < other.coords

    def __iter__(self):
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __repr__(self) -> str:
        return "Weight(" + ", ".join(str(c) for c in self.coords) + ")"


class RationalPoint:
    """Values of the coordinate exponentials ``e^{eps_i}``; all nonzero."""

    __slots__ = ("values",)

    def __init__(self, values: Iterable):
        vals = tuple(_frac(v) for v in values)
        if any(v == 0 for v in vals):
            raise ValueError("RationalPoint entries must be nonzero")
        object.__setattr__(self, "values", vals)

    def __setattr__(self, name, value):
        raise AttributeError("RationalPoint is immutable")

    def __reduce__(self):
        return (RationalPoint, (self.values,))

    @property
    def dim(self) -> int:
        return len(self.values)

    def monomial(self, lam: Weight) -> Fraction:
        """Value of ``e^lam`` at this point."""
        if lam.dim != self.dim:
            raise DimensionMismatch(f"weight of dimension {lam.dim} at point of dimension {self.dim}")
        out = Fraction(1)
        for c, z in zip(lam.coords, self.values):
            if c.denominator != 1:
                raise NonIntegralExponent(f"non-integral exponent in {lam!r}")
            if c:
                out *= z ** c.numerator
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalPoint) and self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return "RationalPoint(" + ", ".join(str(v) for v in self.values) + ")"


class WeightPoly:
    """Sparse integer combination of exponentials ``e^lam``.

    Instances are treated as immutable; every operation returns a new value.
    """

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: Mapping[Weight, int] | None = None):
        clean = {}
        if terms:
            for lam, c in terms.items():
                if lam.dim != dim:
                    raise DimensionMismatch(f"weight of dimension {lam.dim} in poly of dimension {dim}")
                if c:
                    clean[lam] = int(c)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("WeightPoly is immutable")

    def __reduce__(self):
        return (WeightPoly, (self.dim, self.terms))

    @classmethod
    def _raw(cls, dim: int, terms: dict) -> "WeightPoly":
        # trusted constructor: terms already clean and owned by the caller
        p = object.__new__(cls)
        object.__setattr__(p, "dim", dim)
        object.__setattr__(p, "terms", terms)
        return p

    @classmethod
    def monomial(cls, lam: Weight, coeff: int = 1) -> "WeightPoly":
        return cls(lam.dim, {lam: coeff})

    @classmethod
    def constant(cls, dim: int, c: int = 1) -> "WeightPoly":
        return cls(dim, {Weight.zero(dim): c})

    @classmethod
    def zero(cls, dim: int) -> "WeightPoly":
        return cls._raw(dim, {})

    def _check(self, other: "WeightPoly") -> None:
        if other.dim != self.dim:
            raise DimensionMismatch(f"polynomials of dimension {self.dim} and {other.dim}")

    def __add__(self, other: "WeightPoly") -> "WeightPoly":
        self._check(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            v = out.get(lam, 0) + c
            if v:
                out[lam] = v
            else:
                out.pop(lam, None)
        return WeightPoly._raw(self.dim, out)

    def __neg__(self) -> "WeightPoly":
        return WeightPoly._raw(self.dim, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other: "WeightPoly") -> "WeightPoly":
        return self + (-other)

    def __mul__(self, other) -> "WeightPoly":
        if isinstance(other, int):
            if other == 0:
                return WeightPoly.zero(self.dim)
            return WeightPoly._raw(self.dim, {lam: c * other for lam, c in self.terms.items()})
        self._check(other)
        out: dict[Weight, int] = {}
        for lam, c in self.terms.items():
            for mu, d in other.terms.items():
                key = lam + mu
                out[key] = out.get(key, 0) + c * d
        return WeightPoly._raw(self.dim, {k: v for k, v in out.items() if v})

    def __rmul__(self, other) -> "WeightPoly":
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> "WeightPoly":
        out = WeightPoly.constant(self.dim)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == WeightPoly.constant(self.dim, other) if other else not self.terms
        return isinstance(other, WeightPoly) and self.dim == other.dim and self.terms == other.terms

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coeff(self, lam: Weight) -> int:
        return self.terms.get(lam, 0)

    def items(self):
        """Terms in a deterministic order (sorted by weight)."""
        return sorted(self.terms.items())

    def total(self) -> int:
        """Sum of coefficients, i.e. the value at the identity of the torus."""
        return sum(self.terms.values())

    def __repr__(self) -> str:
        if not self.terms:
            return "WeightPoly(0)"
        parts = [f"{c}*e^({','.join(str(x) for x in lam.coords)})" for lam, c in self.items()]
        return "WeightPoly(" + " + ".join(parts) + ")"


def wp_add(a: WeightPoly, b: WeightPoly) -> WeightPoly:
    return a + b


def wp_mul(a: WeightPoly, b: WeightPoly) -> WeightPoly:
    return a * b


def wp_eval(a: WeightPoly, z: RationalPoint) -> Fraction:
    """Specialize ``e^{eps_i} -> z_i``; exponents must be integral."""
    if a.dim != z.dim:
        raise DimensionMismatch(f"poly of dimension {a.dim} at point of dimension {z.dim}")
    return sum((c * z.monomial(lam) for lam, c in a.terms.items()), Fraction(0))


def wp_act(w, a: WeightPoly) -> WeightPoly:
    """Apply a Weyl group element termwise: ``e^lam -> e^{w(lam)}``."""
    if w.dim != a.dim:
        raise DimensionMismatch(f"Weyl element on R^{w.dim} acting on poly of dimension {a.dim}")
    return WeightPoly._raw(a.dim, {w.apply(lam): c for lam, c in a.terms.items()})
