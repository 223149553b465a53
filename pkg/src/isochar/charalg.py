"""Irreducible characters, Bott's algorithm and representation-ring bookkeeping."""

from __future__ import annotations

import threading
from collections import OrderedDict
from fractions import Fraction
from typing import Mapping

import numpy as np

from .errors import NotDominant, NotInvariant
from ._kernels import fits_int64
from .rootsys import RootSystem, WeylElement, scaled_rows
from .weightlat import Weight, WeightPoly, wp_act


class VirtualCharacter:
    """Integer combination ``sum c_mu [V_mu]`` of irreducibles, keyed by dominant mu."""

    __slots__ = ("rs", "terms")

    def __init__(self, rs: RootSystem, terms: Mapping[Weight, int] | None = None, check: bool = True):
        clean = {mu: int(c) for mu, c in (terms or {}).items() if c}
        if check:
            for mu in clean:
                if not rs.is_dominant(mu):
                    raise NotDominant(f"{mu!r} is not dominant for {rs.name}")
        object.__setattr__(self, "rs", rs)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("VirtualCharacter is immutable")

    def __reduce__(self):
        return (VirtualCharacter, (self.rs, self.terms, False))

    @classmethod
    def irreducible(cls, rs: RootSystem, mu: Weight, mult: int = 1) -> "VirtualCharacter":
        return cls(rs, {mu: mult})

    @classmethod
    def zero(cls, rs: RootSystem) -> "VirtualCharacter":
        return cls(rs, {}, check=False)

    def __add__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        out = dict(self.terms)
        for mu, c in other.terms.items():
            out[mu] = out.get(mu, 0) + c
        return VirtualCharacter(self.rs, out, check=False)

    def __neg__(self) -> "VirtualCharacter":
        return VirtualCharacter(self.rs, {mu: -c for mu, c in self.terms.items()}, check=False)

    def __sub__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        return self + (-other)

    def __mul__(self, k: int) -> "VirtualCharacter":
        return VirtualCharacter(self.rs, {mu: c * k for mu, c in self.terms.items()}, check=False)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, VirtualCharacter) and self.rs == other.rs and self.terms == other.terms

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def mult(self, mu: Weight) -> int:
        return self.terms.get(mu, 0)

    def items(self):
        return sorted(self.terms.items())

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def dimension(self) -> int:
        return sum(c * weyl_dim(self.rs, mu) for mu, c in self.terms.items())

    def expand(self) -> WeightPoly:
        out = WeightPoly.zero(self.rs.dim)
        for mu, c in self.items():
            out = out + irr_char(self.rs, mu) * c
        return out

    def __repr__(self) -> str:
        if not self.terms:
            return "VirtualCharacter(0)"
        parts = [f"{c}*[V({','.join(str(x) for x in mu.coords)})]" for mu, c in self.items()]
        return "VirtualCharacter(" + " + ".join(parts) + ")"


# memo caches ----------------------------------------------------------------


class _Memo:
    """Lock-protected LRU map; ``limit=None`` means unbounded."""

    def __init__(self, limit: int | None = None):
        self.limit = limit
        self._data: OrderedDict = OrderedDict()
        self._lock = threading.Lock()

    def get(self, key):
        with self._lock:
            val = self._data.get(key)
            if val is not None:
                self._data.move_to_end(key)
            return val

    def put(self, key, value):
        with self._lock:
            self._data.setdefault(key, value)
            self._data.move_to_end(key)
            if self.limit is not None:
                while len(self._data) > self.limit:
                    self._data.popitem(last=False)
            return self._data[key]

    def clear(self):
        with self._lock:
            self._data.clear()

    def __len__(self):
        return len(self._data)


_dominant_mults = _Memo()
_characters = _Memo()


def set_cache_limit(limit: int | None) -> None:
    for m in (_dominant_mults, _characters):
        m.limit = limit


def clear_caches() -> None:
    _dominant_mults.clear()
    _characters.clear()


# characters -----------------------------------------------------------------


def _require_dominant(rs: RootSystem, mu: Weight) -> None:
    if mu.dim != rs.dim:
        raise NotDominant(f"weight of dimension {mu.dim} for {rs.name}")
    if not rs.is_dominant(mu):
        raise NotDominant(f"{mu!r} is not dominant for {rs.name}")


def weyl_dim(rs: RootSystem, mu: Weight) -> int:
    """Weyl dimension formula."""
    _require_dominant(rs, mu)
    num = Fraction(1)
    shifted = mu + rs.rho
    for g in rs.positive_roots:
        num *= rs.coroot_pairing(shifted, g) / rs.coroot_pairing(rs.rho, g)
    assert num.denominator == 1
    return int(num)


def dominant_multiplicities(rs: RootSystem, mu: Weight) -> dict:
    """Multiplicities of the dominant weights of V_mu, by Freudenthal's recursion."""
    _require_dominant(rs, mu)
    key = (rs.key, mu)
    hit = _dominant_mults.get(key)
    if hit is not None:
        return hit

    pos = rs.positive_roots
    # collect dominant weights below mu together with their depth
    depth = {mu: 0}
    frontier = [mu]
    heights = [sum(rs.simple_coordinates(a)) for a in pos]
    while frontier:
        nxt = []
        for nu in frontier:
            for a, h in zip(pos, heights):
                x = nu - a
                if x not in depth and rs.is_dominant(x):
                    depth[x] = depth[nu] + h
                    nxt.append(x)
        frontier = nxt
    order = sorted(depth, key=lambda x: (depth[x], x))

    dom_cache: dict = {}

    def dominant(x):
        d = dom_cache.get(x)
        if d is None:
            d = dom_cache[x] = rs.dominant_form(x)
        return d

    top = (mu + rs.rho).dot(mu + rs.rho)
    mult = {mu: 1}
    for nu in order[1:]:
        acc = Fraction(0)
        for a in pos:
            k = 1
            while True:
                x = nu + a * k
                m = mult.get(dominant(x))
                if m is None:
                    break
                acc += m * x.dot(a)
                k += 1
        val = 2 * acc / (top - (nu + rs.rho).dot(nu + rs.rho))
        assert val.denominator == 1, "Freudenthal produced a non-integer multiplicity"
        mult[nu] = int(val)
    out = {nu: m for nu, m in mult.items() if m}
    return _dominant_mults.put(key, out)


def irr_char(rs: RootSystem, mu: Weight) -> WeightPoly:
    """Full weight-multiplicity character of the irreducible V_mu."""
    _require_dominant(rs, mu)
    key = (rs.key, mu)
    hit = _characters.get(key)
    if hit is not None:
        return hit
    terms = {}
    for nu, m in dominant_multiplicities(rs, mu).items():
        for x in rs.orbit(nu):
            terms[x] = m
    return _characters.put(key, WeightPoly(rs.dim, terms))


def bott_euler(rs: RootSystem, lam: Weight) -> VirtualCharacter:
    """Euler characteristic of the line bundle L_lam on G/B.

    Zero when lam + rho is singular, else ``(-1)^l(w) [V_{w(lam+rho)-rho}]``.
    """
    dc = rs.dominant_conjugate(lam + rs.rho)
    if not dc.regular:
        return VirtualCharacter.zero(rs)
    return VirtualCharacter(rs, {dc.mu - rs.rho: dc.w.sign}, check=False)


def bott_euler_poly(rs: RootSystem, p: WeightPoly) -> VirtualCharacter:
    """Linear extension of :func:`bott_euler` over a WeightPoly, batched."""
    items = p.items()
    shifted = [lam + rs.rho for lam, _ in items]
    out: dict = {}
    for (lam, c), (mu, length, wall) in zip(items, rs.dominant_many(shifted)):
        if wall:
            continue
        key = mu - rs.rho
        out[key] = out.get(key, 0) + (-c if length % 2 else c)
    return VirtualCharacter(rs, out, check=False)


def _simple_reflection_elements(rs: RootSystem):
    from .rootsys import _reflection

    return [WeylElement(_reflection(a), 1, (i,)) for i, a in enumerate(rs.simple_roots)]


def is_w_invariant(rs: RootSystem, p: WeightPoly, full: bool = False) -> bool:
    """Invariance under the simple reflections, or under every element if ``full``."""
    if not full:
        return all(wp_act(s, p) == p for s in _simple_reflection_elements(rs))
    items = p.items()
    weights = [lam for lam, _ in items]
    _, rows = scaled_rows(weights)
    group = rs.weyl_group()
    bound = max(int(np.abs(w._int_matrix[0]).max()) for w in group)
    if rows and fits_int64(rows, [bound]):
        arr = np.array(rows, dtype=np.int64).reshape(len(rows), rs.dim)
        coeffs = np.array([c for _, c in items], dtype=object)
        base = _canonical_rows(arr, coeffs)
        for w in group:
            image = rs.act_rows(w, arr)
            if image is None:
                return False
            got = _canonical_rows(image, coeffs)
            if not (np.array_equal(got[0], base[0]) and list(got[1]) == list(base[1])):
                return False
        return True
    for w in group:
        image = dict(zip(rs.act_many(w, weights), (c for _, c in items)))
        if image != p.terms:
            return False
    return True


def _canonical_rows(arr, coeffs):
    order = np.lexsort(arr.T[::-1])
    return arr[order], coeffs[order]


def decompose(rs: RootSystem, p: WeightPoly) -> VirtualCharacter:
    """Write a W-invariant WeightPoly as a combination of irreducible characters."""
    if p.dim != rs.dim:
        raise NotInvariant(f"poly of dimension {p.dim} for {rs.name}")
    if not is_w_invariant(rs, p):
        raise NotInvariant("polynomial is not W-invariant")
    rho = rs.rho
    out: dict = {}
    rest = p
    while rest:
        lam = max(rest.terms, key=lambda x: (x.dot(rho), x))
        if not rs.is_dominant(lam):
            raise NotInvariant(f"no dominant maximal term (found {lam!r})")
        c = rest.terms[lam]
        out[lam] = c
        rest = rest - irr_char(rs, lam) * c
    return VirtualCharacter(rs, out, check=False)
