"""Small exact linear algebra over Q."""

from __future__ import annotations

from fractions import Fraction


def solve(columns, target):
    """Solve ``sum c_j columns[j] = target`` exactly; None if inconsistent.

    ``columns`` must be linearly independent.
    """
    ncol = len(columns)
    nrow = len(target)
    rows = [[Fraction(columns[j][i]) for j in range(ncol)] + [Fraction(target[i])] for i in range(nrow)]
    piv_cols = []
    r = 0
    for c in range(ncol):
        p = next((i for i in range(r, nrow) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(nrow):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    if any(rows[i][ncol] != 0 for i in range(r, nrow)):
        return None
    if len(piv_cols) != ncol:
        raise ValueError("columns are linearly dependent")
    return [rows[k][ncol] for k in range(ncol)]


def inverse(mat):
    n = len(mat)
    cols = []
    for j in range(n):
        e = [Fraction(int(i == j)) for i in range(n)]
        cols.append(solve([[mat[i][k] for i in range(n)] for k in range(n)], e))
    # cols[j] is column j of the inverse
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def sparse_rank(rows) -> int:
    """Rank of a list of sparse rows ``{column: value}`` over Q.

    Fraction-exact Gaussian elimination keyed by pivot column.
    """
    pivots: dict = {}
    rank = 0
    for row in rows:
        v = {k: Fraction(x) for k, x in row.items() if x}
        while v:
            col = min(v)
            piv = pivots.get(col)
            if piv is None:
                inv = 1 / v[col]
                pivots[col] = {k: x * inv for k, x in v.items()}
                rank += 1
                break
            f = v[col]
            for k, x in piv.items():
                nv = v.get(k, 0) - f * x
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
    return rank
