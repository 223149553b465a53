"""Sparse multivariate polynomials over Q with the degrevlex order."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Mapping


def degrevlex_key(exp: tuple):
    """Sort key: a larger key means a larger monomial in degrevlex."""
    return (sum(exp), tuple(-e for e in reversed(exp)))


def divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


class MultiPoly:
    """Polynomial ``sum c_e x^e`` over a fixed number of variables."""

    __slots__ = ("nvars", "terms", "_lm")

    def __init__(self, nvars: int, terms: Mapping[tuple, object] | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has arity {len(e)}, expected {nvars}")
            c = Fraction(c)
            if c:
                clean[tuple(e)] = c
        self.nvars = nvars
        self.terms = clean
        self._lm = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "MultiPoly":
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._lm = None
        return p

    @classmethod
    def var(cls, nvars: int, k: int) -> "MultiPoly":
        return cls._raw(nvars, {tuple(int(i == k) for i in range(nvars)): Fraction(1)})

    @classmethod
    def const(cls, nvars: int, c) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultiPoly.const(self.nvars, other)
        return isinstance(other, MultiPoly) and self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    def __add__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(self.nvars, other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            c = Fraction(other)
            if not c:
                return MultiPoly._raw(self.nvars, {})
            return MultiPoly._raw(self.nvars, {e: v * c for e, v in self.terms.items()})
        out: dict = {}
        for e, c in self.terms.items():
            for f, d in other.terms.items():
                k = mono_mul(e, f)
                out[k] = out.get(k, 0) + c * d
        return MultiPoly._raw(self.nvars, {k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        out = MultiPoly.const(self.nvars, 1)
        for _ in range(n):
            out = out * self
        return out

    def mul_term(self, mono: tuple, c) -> "MultiPoly":
        return MultiPoly._raw(self.nvars, {mono_mul(e, mono): v * c for e, v in self.terms.items()})

    @property
    def lm(self) -> tuple:
        """Leading monomial in degrevlex."""
        if self._lm is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading monomial")
            self._lm = max(self.terms, key=degrevlex_key)
        return self._lm

    @property
    def lc(self) -> Fraction:
        return self.terms[self.lm]

    def monic(self) -> "MultiPoly":
        return self * (1 / self.lc)

    def primitive(self) -> "MultiPoly":
        """Integer coefficients with content removed and positive leading coefficient."""
        if not self.terms:
            return self
        den = lcm(*(c.denominator for c in self.terms.values()))
        nums = [int(c * den) for c in self.terms.values()]
        g = 0
        for n in nums:
            g = gcd(g, n)
        scale = Fraction(den, g)
        if self.lc < 0:
            scale = -scale
        return self * scale

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: degrevlex_key(t[0]), reverse=True)

    def degree_under(self, weights) -> set:
        """Set of weighted degrees of the terms (weights: per-variable tuples)."""
        out = set()
        for e in self.terms:
            out.add(tuple(sum(x * w[k] for x, w in zip(e, weights)) for k in range(len(weights[0]))))
        return out

    def evaluate(self, values) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for x, v in zip(e, values):
                if x:
                    t *= Fraction(v) ** x
            total += t
        return total

    def format(self, names) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(n if x == 1 else f"{n}^{x}" for n, x in zip(names, e) if x)
            coef = str(c)
            if not mono:
                parts.append(coef)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{coef}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"MultiPoly({self.format([f'v{i}' for i in range(self.nvars)])})"
