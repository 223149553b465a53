"""Gröbner-basis oracle for the fiber-product scheme over the invariant quotient.

The ideal J in C[g x g x t x t] is generated by the entries of the commutator
[x, y] together with ``f(x, y) - f(t1, t2)`` for generators f of the
diagonal-conjugation invariants, where the right-hand side is f restricted to
pairs of diagonal matrices.  Its bigraded Hilbert function is read off the
staircase of the leading-term ideal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ._linalg import sparse_rank
from .budget import Budget, default_budget
from .errors import BudgetExceeded
from .multipoly import MultiPoly, degrevlex_key, divides, mono_div, mono_lcm, mono_mul

PRESETS = ("gl1", "sl2", "gl2")
PRESET_ROOT_SYSTEMS = {"gl1": ("GL", 1), "sl2": ("A", 1), "gl2": ("GL", 2)}


@dataclass
class IdealPresentation:
    variables: list  # (name, (d1, d2))
    generators: list
    name: str = ""

    def __post_init__(self):
        for g in self.generators:
            if len(g.degree_under(self.bidegrees)) > 1:
                raise ValueError(f"generator {g.format(self.names)} is not bihomogeneous")

    @property
    def names(self) -> list:
        return [v[0] for v in self.variables]

    @property
    def bidegrees(self) -> list:
        return [v[1] for v in self.variables]

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def bidegree(self, g: MultiPoly) -> tuple:
        (d,) = g.degree_under(self.bidegrees)
        return d


@dataclass
class GroebnerBasis:
    basis: list
    variables: list
    order: str = "degrevlex"
    stats: dict = field(default_factory=dict)

    @property
    def names(self) -> list:
        return [v[0] for v in self.variables]

    def leading_monomials(self) -> list:
        return [g.lm for g in self.basis]

    def to_text(self) -> str:
        """Canonical text form: header, then one monic polynomial per line."""
        lines = [
            f"# order {self.order}",
            "# variables " + " ".join(f"{n}:{d[0]},{d[1]}" for n, d in self.variables),
        ]
        lines += [g.format(self.names) for g in self.basis]
        return "\n".join(lines) + "\n"


# presets --------------------------------------------------------------------


def _matmul(a, b):
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)), 0 * a[0][0]) for j in range(n)] for i in range(n)]


def _trace(a):
    out = a[0][0]
    for i in range(1, len(a)):
        out = out + a[i][i]
    return out


def _invariants(preset, x, y):
    """Generators of C[g x g]^G for the preset, as trace words in (x, y)."""
    quad = [_trace(_matmul(x, x)), _trace(_matmul(x, y)), _trace(_matmul(y, y))]
    if preset == "sl2":
        return quad
    return [_trace(x), _trace(y)] + quad


def build_J(preset: str) -> IdealPresentation:
    """Explicit presentation of the ideal for one of the presets gl1, sl2, gl2."""
    if preset not in PRESETS:
        raise ValueError(f"unsupported preset {preset!r}; choose from {PRESETS}")
    if preset == "gl1":
        names = [("x", (1, 0)), ("y", (0, 1)), ("t1", (1, 0)), ("t2", (0, 1))]
        n = len(names)
        x, y, t1, t2 = (MultiPoly.var(n, k) for k in range(n))
        return IdealPresentation(names, [x - t1, y - t2], preset)

    if preset == "sl2":
        names = [(s, (1, 0)) for s in "abc"] + [(s, (0, 1)) for s in "def"] + [("t1", (1, 0)), ("t2", (0, 1))]
        n = len(names)
        a, b, c, d, e, f, t1, t2 = (MultiPoly.var(n, k) for k in range(n))
        X = [[a, b], [c, -a]]
        Y = [[d, e], [f, -d]]
        T1 = [[t1, 0 * t1], [0 * t1, -t1]]
        T2 = [[t2, 0 * t2], [0 * t2, -t2]]
    else:
        xs = ["x11", "x12", "x21", "x22"]
        ys = ["y11", "y12", "y21", "y22"]
        names = [(s, (1, 0)) for s in xs] + [(s, (0, 1)) for s in ys]
        names += [("t1_1", (1, 0)), ("t1_2", (1, 0)), ("t2_1", (0, 1)), ("t2_2", (0, 1))]
        n = len(names)
        v = [MultiPoly.var(n, k) for k in range(n)]
        X = [[v[0], v[1]], [v[2], v[3]]]
        Y = [[v[4], v[5]], [v[6], v[7]]]
        zero = 0 * v[0]
        T1 = [[v[8], zero], [zero, v[9]]]
        T2 = [[v[10], zero], [zero, v[11]]]

    xy = _matmul(X, Y)
    yx = _matmul(Y, X)
    gens = []
    for i in range(2):
        for j in range(2):
            p = (xy[i][j] - yx[i][j]).primitive()
            # drop the zero trace component and duplicates up to sign
            if p and not any(p == g for g in gens):
                gens.append(p)
    for f, r in zip(_invariants(preset, X, Y), _invariants(preset, T1, T2)):
        gens.append((f - r).primitive())
    return IdealPresentation(names, gens, preset)


# Buchberger -----------------------------------------------------------------


def normal_form(f: MultiPoly, basis: list) -> MultiPoly:
    """Full reduction of f modulo basis (leading monomials taken in degrevlex)."""
    h = dict(f.terms)
    rem = {}
    lms = [(g.lm, g.lc, g) for g in basis]
    while h:
        m = max(h, key=degrevlex_key)
        c = h[m]
        for lm, lc, g in lms:
            if divides(lm, m):
                q = mono_div(m, lm)
                scale = c / lc
                for e, v in g.terms.items():
                    k = mono_mul(e, q)
                    nv = h.get(k, 0) - scale * v
                    if nv:
                        h[k] = nv
                    else:
                        h.pop(k, None)
                break
        else:
            rem[m] = c
            del h[m]
    return MultiPoly._raw(f.nvars, rem)


def s_polynomial(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    L = mono_lcm(f.lm, g.lm)
    return f.mul_term(mono_div(L, f.lm), 1 / f.lc) - g.mul_term(mono_div(L, g.lm), 1 / g.lc)


def _coprime(a: tuple, b: tuple) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def buchberger(p: IdealPresentation, budget: Budget | None = None) -> GroebnerBasis:
    """Reduced degrevlex Gröbner basis of the ideal generated by p.generators.

    Pairs with coprime leading monomials are skipped; every other pair costs
    one unit of the ``pairs`` budget.
    """
    budget = budget or default_budget()
    G = [g.monic() for g in p.generators if g]
    pairs = set(combinations(range(len(G)), 2))
    reductions = 0
    skipped = 0

    def pair_key(ij):
        i, j = ij
        return (degrevlex_key(mono_lcm(G[i].lm, G[j].lm)), ij)

    while pairs:
        ij = min(pairs, key=pair_key)
        pairs.discard(ij)
        i, j = ij
        if _coprime(G[i].lm, G[j].lm):
            skipped += 1
            continue
        reductions += 1
        if reductions > budget.pairs:
            raise BudgetExceeded(f"Buchberger exceeded {budget.pairs} pair reductions")
        r = normal_form(s_polynomial(G[i], G[j]), G)
        if r:
            G.append(r.monic())
            k = len(G) - 1
            pairs |= {(a, k) for a in range(k)}

    # minimalize then interreduce
    G.sort(key=lambda g: degrevlex_key(g.lm))
    minimal = []
    for g in G:
        if not any(divides(h.lm, g.lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        tail = MultiPoly._raw(g.nvars, {e: c for e, c in g.terms.items() if e != g.lm})
        reduced.append(MultiPoly._raw(g.nvars, {g.lm: g.lc}) + normal_form(tail, others))
    reduced = [g.monic() for g in reduced]
    reduced.sort(key=lambda g: degrevlex_key(g.lm), reverse=True)
    return GroebnerBasis(reduced, list(p.variables), stats={"reductions": reductions, "skipped": skipped})


def is_groebner(basis: list) -> bool:
    """Every S-polynomial reduces to zero."""
    for f, g in combinations(basis, 2):
        if normal_form(s_polynomial(f, g), basis):
            return False
    return True


# Hilbert functions -----------------------------------------------------------


def monomials_of_bidegree(bidegrees, i: int, j: int):
    """All exponent vectors of total bidegree (i, j)."""
    n = len(bidegrees)
    if any(d == (0, 0) for d in bidegrees):
        raise ValueError("variables of bidegree (0, 0) make the graded pieces infinite")
    out = []
    exp = [0] * n

    def rec(k, r1, r2):
        if k == n:
            if r1 == 0 and r2 == 0:
                out.append(tuple(exp))
            return
        d1, d2 = bidegrees[k]
        e = 0
        while e * d1 <= r1 and e * d2 <= r2:
            exp[k] = e
            rec(k + 1, r1 - e * d1, r2 - e * d2)
            e += 1
        exp[k] = 0

    rec(0, i, j)
    return out


def bigraded_hilbert(gb: GroebnerBasis, variables, I: int, J: int, budget: Budget | None = None) -> dict:
    """Count standard monomials (not divisible by a leading monomial) per bidegree."""
    budget = budget or default_budget()
    bidegrees = [v[1] for v in variables]
    lms = gb.leading_monomials()
    out = {}
    seen = 0
    for i in range(I + 1):
        for j in range(J + 1):
            monos = monomials_of_bidegree(bidegrees, i, j)
            seen += len(monos)
            budget.check("monomials", seen)
            out[(i, j)] = sum(1 for m in monos if not any(divides(l, m) for l in lms))
    return out


def linear_algebra_hilbert(p: IdealPresentation, I: int, J: int) -> dict:
    """Quotient dimensions by row-reducing generator multiples in each bidegree."""
    bids = p.bidegrees
    gens = [(p.bidegree(g), g) for g in p.generators if g]
    out = {}
    for i in range(I + 1):
        for j in range(J + 1):
            basis = monomials_of_bidegree(bids, i, j)
            index = {m: k for k, m in enumerate(basis)}
            rows = []
            for (a, b), g in gens:
                if a > i or b > j:
                    continue
                for m in monomials_of_bidegree(bids, i - a, j - b):
                    rows.append({index[mono_mul(e, m)]: c for e, c in g.terms.items()})
            out[(i, j)] = len(basis) - sparse_rank(rows)
    return out


# comparison -----------------------------------------------------------------


@dataclass
class ComparisonReport:
    rows: list  # (i, j, scheme_dim, xnorm_dim, gap)
    preset: str = ""
    first_divergence: tuple | None = None
    ok: bool = True
    failures: list = field(default_factory=list)

    def to_csv(self) -> str:
        lines = ["i,j,scheme_dim,xnorm_dim,gap"]
        lines += [",".join(str(v) for v in row) for row in self.rows]
        return "\n".join(lines) + "\n"


def compare_scheme_vs_character(hilb: dict, dims: dict, preset: str = "") -> ComparisonReport:
    """Tabulate scheme dimensions against character dimensions on a common box.

    The (0, 0) entries must agree; for gl1 every entry must agree.
    """
    if set(hilb) != set(dims):
        raise ValueError("Hilbert table and dimension table cover different boxes")
    rows = []
    first = None
    for ij in sorted(hilb):
        s, x = hilb[ij], dims[ij]
        rows.append((ij[0], ij[1], s, x, s - x))
        if s != x and (first is None or (sum(ij), ij) < (sum(first), first)):
            first = ij
    failures = []
    if (0, 0) in hilb and hilb[(0, 0)] != dims[(0, 0)]:
        failures.append((0, 0))
    if preset == "gl1":
        failures += [ij for ij in sorted(hilb) if hilb[ij] != dims[ij] and ij != (0, 0)]
    return ComparisonReport(rows, preset, first, not failures, failures)
