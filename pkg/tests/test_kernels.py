import os
import subprocess
import sys

import numpy as np
import pytest

from conftest import rs_of
from isochar import _kernels

ROOT_SYSTEMS = [("A", 2), ("B", 3), ("C", 3), ("D", 4), ("G2", 2)]


def batch(rs, n, seed):
    rng = np.random.default_rng(seed)
    simple, norm2 = rs._kernel_roots
    # integer combinations of simple roots keep every coroot pairing integral
    coeffs = rng.integers(-6, 7, size=(n, simple.shape[0]))
    return coeffs @ simple, simple, norm2


@pytest.mark.parametrize("family,n", ROOT_SYSTEMS)
def test_reflect_backends_agree(family, n):
    rs = rs_of(family, n)
    lam, simple, norm2 = batch(rs, 300, 7)
    ref = _kernels._python_reflect_to_dominant(lam, simple, norm2)
    got = _kernels.numpy_reflect_to_dominant(lam, simple, norm2)
    for a, b in zip(ref, got):
        np.testing.assert_array_equal(a, b)
    if _kernels.numba_reflect_to_dominant is not None:
        got = _kernels.numba_reflect_to_dominant(lam, simple, norm2)
        for a, b in zip(ref, got):
            np.testing.assert_array_equal(a, b)


@pytest.mark.parametrize("family,n", ROOT_SYSTEMS)
def test_reflect_matches_exact_path(family, n):
    rs = rs_of(family, n)
    lam, simple, norm2 = batch(rs, 50, 3)
    from isochar.weightlat import Weight

    weights = [Weight(int(v) for v in row) for row in lam]
    for x, (mu, length, wall) in zip(weights, rs.dominant_many(weights)):
        assert mu == rs.dominant_form(x)
        assert wall == (not rs.is_regular(mu))
        if not wall:
            assert length == rs.dominant_conjugate(x).w.length


@pytest.mark.parametrize("family,n", ROOT_SYSTEMS)
def test_apply_backends_agree(family, n):
    rs = rs_of(family, n)
    lam, _, _ = batch(rs, 100, 11)
    for w in rs.weyl_group()[::5]:
        num, den = w._int_matrix
        ref = _kernels._python_apply_matrix(num, den, lam)[0]
        np.testing.assert_array_equal(_kernels.numpy_apply_matrix(num, den, lam), ref)
        if _kernels.numba_apply_matrix is not None:
            np.testing.assert_array_equal(_kernels.numba_apply_matrix(num, den, lam), ref)


def test_apply_rejects_off_lattice():
    num = np.array([[1, 1], [0, 3]], dtype=np.int64)
    lam = np.array([[1, 0]], dtype=np.int64)
    with pytest.raises(ValueError):
        _kernels.numpy_apply_matrix(num, 3, lam)


def test_fits_int64():
    assert _kernels.fits_int64([[1, 2, 3]], np.eye(3, dtype=np.int64))
    assert not _kernels.fits_int64([[1 << 40, 0]], np.eye(2, dtype=np.int64))


def test_env_flag_forces_numpy():
    env = dict(os.environ, ISOCHAR_DISABLE_NUMBA="1")
    code = (
        "from isochar import _kernels\n"
        "from isochar.bichar import hc_bigraded_character, dimension_series\n"
        "from isochar.rootsys import build_root_system\n"
        "print(_kernels.BACKEND)\n"
        "print(dimension_series(hc_bigraded_character(build_root_system('A', 2), 2, 2))[(2, 2)])\n"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    backend, value = out.stdout.split()
    assert backend == "numpy"
    from isochar.bichar import dimension_series, hc_bigraded_character

    assert int(value) == dimension_series(hc_bigraded_character(rs_of("A", 2), 2, 2))[(2, 2)]
