"""Integer lattice kernels with a numba path and a pure-numpy fallback.

Weights are passed as int64 arrays holding ``D * lam`` for a common scale
``D`` chosen by the caller so that every row is integral and every simple
coroot pairing stays integral under reflections.

Set ``ISOCHAR_DISABLE_NUMBA=1`` to force the numpy path.
"""

from __future__ import annotations

import os

import numpy as np

# keep int64 products well inside range
INT_LIMIT = 1 << 60


def _numpy_reflect_to_dominant(lam, simple, norm2):
    x = np.array(lam, dtype=np.int64, copy=True)
    n = x.shape[0]
    length = np.zeros(n, dtype=np.int64)
    if simple.shape[0] == 0 or n == 0:
        return x, length, np.zeros(n, dtype=np.bool_)
    while True:
        pair = x @ simple.T
        neg = pair < 0
        rows = np.flatnonzero(neg.any(axis=1))
        if rows.size == 0:
            break
        first = np.argmax(neg[rows], axis=1)
        c = (2 * pair[rows, first]) // norm2[first]
        x[rows] -= c[:, None] * simple[first]
        length[rows] += 1
    wall = ((x @ simple.T) == 0).any(axis=1)
    return x, length, wall


def _numpy_apply_matrix(mat_num, den, lam):
    prod = np.asarray(lam, dtype=np.int64) @ mat_num.T
    if den != 1:
        if np.any(prod % den):
            raise ValueError("Weyl action left the scaled lattice")
        prod //= den
    return prod


def _python_reflect_to_dominant(lam, simple, norm2):
    # reference loop; compiled by numba when available
    n, d = lam.shape
    r = simple.shape[0]
    x = lam.copy()
    length = np.zeros(n, dtype=np.int64)
    wall = np.zeros(n, dtype=np.bool_)
    for row in range(n):
        steps = 0
        moved = True
        while moved:
            moved = False
            for i in range(r):
                p = 0
                for k in range(d):
                    p += x[row, k] * simple[i, k]
                if p < 0:
                    c = (2 * p) // norm2[i]
                    for k in range(d):
                        x[row, k] -= c * simple[i, k]
                    steps += 1
                    moved = True
                    break
        for i in range(r):
            p = 0
            for k in range(d):
                p += x[row, k] * simple[i, k]
            if p == 0:
                wall[row] = True
        length[row] = steps
    return x, length, wall


def _python_apply_matrix(mat_num, den, lam):
    n, d = lam.shape
    out = np.zeros((n, d), dtype=np.int64)
    bad = False
    for row in range(n):
        for i in range(d):
            s = 0
            for k in range(d):
                s += mat_num[i, k] * lam[row, k]
            if s % den != 0:
                bad = True
            out[row, i] = s // den
    return out, bad


def _load_numba():
    if os.environ.get("ISOCHAR_DISABLE_NUMBA", "").strip() not in ("", "0"):
        return None
    try:
        import numba
    except ImportError:  # pragma: no cover - numba is a declared dependency
        return None
    return numba


_numba = _load_numba()

if _numba is not None:
    BACKEND = "numba"
    _nb_reflect = _numba.njit(cache=True, nogil=True)(_python_reflect_to_dominant)
    _nb_apply = _numba.njit(cache=True, nogil=True)(_python_apply_matrix)

    def numba_reflect_to_dominant(lam, simple, norm2):
        lam = np.ascontiguousarray(lam, dtype=np.int64)
        if lam.shape[0] == 0 or simple.shape[0] == 0:
            return _numpy_reflect_to_dominant(lam, simple, norm2)
        return _nb_reflect(lam, np.ascontiguousarray(simple, dtype=np.int64),
                           np.ascontiguousarray(norm2, dtype=np.int64))

    def numba_apply_matrix(mat_num, den, lam):
        lam = np.ascontiguousarray(lam, dtype=np.int64)
        out, bad = _nb_apply(np.ascontiguousarray(mat_num, dtype=np.int64), int(den), lam)
        if bad:
            raise ValueError("Weyl action left the scaled lattice")
        return out

    reflect_to_dominant = numba_reflect_to_dominant
    apply_matrix = numba_apply_matrix
else:
    BACKEND = "numpy"
    numba_reflect_to_dominant = None
    numba_apply_matrix = None
    reflect_to_dominant = _numpy_reflect_to_dominant
    apply_matrix = _numpy_apply_matrix

numpy_reflect_to_dominant = _numpy_reflect_to_dominant
numpy_apply_matrix = _numpy_apply_matrix


def fits_int64(rows, *others) -> bool:
    """True when the kernel products for these integer rows cannot overflow."""
    big = 0
    for row in rows:
        s = sum(int(v) * int(v) for v in row)
        if s > big:
            big = s
    m = 1
    for arr in others:
        for v in np.asarray(arr).ravel():
            m = max(m, abs(int(v)))
    width = max((len(r) for r in rows), default=1)
    return (big + 1) * (m * m) * width * width * 16 < INT_LIMIT
