"""The numba and numpy backends must agree bit for bit."""
import numpy as np
import pytest

from g6census import kernels
from g6census.groupact import gl_elements, linear_tables, substitution_matrix
from g6census.smoothcert import certify_smooth, plane_quintic_table

pytestmark = pytest.mark.filterwarnings("ignore::DeprecationWarning")


@pytest.fixture(scope="module")
def small_table():
    # rational and quadratic points only: a cheap but real table
    return plane_quintic_table(max_deg=2)


def _random_table(seed, n=12, npts=40):
    rng = np.random.default_rng(seed)
    deg = rng.integers(1, 4, npts)
    vmask = (1 << deg) - 1
    smask = (1 << (3 * deg)) - 1
    B = rng.integers(0, 1 << 9, (n, npts)) & smask
    W0 = rng.integers(0, 1 << 9, npts) & smask
    return B, W0, vmask, smask, deg


@pytest.mark.parametrize("seed", range(4))
def test_smooth_scan_backends(seed):
    B, W0, vmask, smask, deg = _random_table(seed)
    a = kernels.smooth_combinations(B, W0, smask, 0, None, backend="numba")
    b = kernels.smooth_combinations(B, W0, smask, 0, None, backend="numpy")
    assert a.tolist() == b.tolist()
    # range split is a partition
    mid = 1 << 11
    lo = kernels.smooth_combinations(B, W0, smask, 0, mid, backend="numba")
    hi = kernels.smooth_combinations(B, W0, smask, mid, None, backend="numba")
    assert sorted(lo.tolist() + hi.tolist()) == sorted(a.tolist())


@pytest.mark.parametrize("seed", range(3))
def test_point_counts_backends(seed):
    B, W0, vmask, smask, deg = _random_table(seed)
    combos = np.arange(1 << 12, dtype=np.int64)
    a = kernels.point_counts(B, W0, vmask, deg, combos, 3, backend="numba")
    b = kernels.point_counts(B, W0, vmask, deg, combos, 3, backend="numpy")
    assert (a == b).all()


def test_orbit_minima_backends():
    mats = gl_elements(3)
    tabs = np.stack([linear_tables(substitution_matrix((3,), (5,), (M,))) for M in mats])
    rng = np.random.default_rng(7)
    vecs = rng.integers(0, 1 << 21, 500).astype(np.int64)
    m1, s1 = kernels.orbit_minima(tabs, vecs, backend="numba")
    m2, s2 = kernels.orbit_minima(tabs, vecs, backend="numpy")
    assert (m1 == m2).all() and (s1 == s2).all()
    assert (m1 <= vecs).all()
    assert (168 % s1 == 0).all()


def test_certificate_matches_scan(small_table):
    T = small_table
    combos = T.smooth_combos(0, 1 << 14)
    some = set(combos.tolist())
    for c in range(1, 400):
        rep = certify_smooth(T, c)
        assert rep.smooth == (c in some)
        if not rep.smooth:
            assert kernels.first_singular(T.B, T.W0, T.smask, c) >= 0
