import numpy as np
import pytest

from g6census.gl5 import (GL5_ORDER, NFORMS, cycle_counts_from_fixed, fixed_counts, form_perms,
                          form_rank, generators, gl5_elements, mat_inv, mat_mul, pack, unpack)
from g6census.groupact import gl_order


def test_enumeration():
    G = gl5_elements()
    assert G.size == GL5_ORDER == gl_order(5)
    assert np.all(np.diff(G) > 0)


def test_pack_inverse():
    rng = np.random.default_rng(0)
    G = gl5_elements()
    one = pack([1, 2, 4, 8, 16])
    for m in rng.choice(G, 50):
        m = int(m)
        assert unpack(pack(unpack(m))) == unpack(m)
        assert mat_mul(m, mat_inv(m)) == one


def test_form_ranks():
    ranks = [form_rank(w) for w in range(1, NFORMS + 1)]
    # 155 decomposable forms (the Grassmannian), 868 of rank 4
    assert ranks.count(2) == 155 and ranks.count(4) == 868


def test_action_is_action():
    rng = np.random.default_rng(1)
    G = gl5_elements()
    for _ in range(20):
        a, b = (int(x) for x in rng.choice(G, 2))
        pa, pb, pab = form_perms([a, b, mat_mul(a, b)])
        # pullback: (AB)^* w = B^*(A^* w)
        assert (pab == pb[pa]).all()


def test_action_preserves_rank():
    p = form_perms(generators())
    for perm in p:
        for w in range(1, NFORMS + 1, 37):
            assert form_rank(int(perm[w - 1]) + 1) == form_rank(w)


def test_fixed_counts_backends():
    rng = np.random.default_rng(2)
    sample = rng.choice(gl5_elements(), 300)
    a = fixed_counts(sample, 4, backend="numba")
    b = fixed_counts(sample, 4, backend="numpy")
    assert (a == b).all()
    # fix(A) + 1 is a power of 2 (fixed points of a linear map)
    assert all(((x + 1) & x) == 0 for x in a.ravel().tolist())


def test_cycle_counts():
    rng = np.random.default_rng(3)
    sample = rng.choice(gl5_elements(), 50)
    cc = cycle_counts_from_fixed(fixed_counts(sample, 4))
    perms = form_perms(sample)
    for row, p in zip(cc, perms):
        seen = np.zeros(NFORMS, dtype=bool)
        lens = []
        for i in range(NFORMS):
            if seen[i]:
                continue
            n, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                n += 1
            lens.append(n)
        assert row.tolist() == [lens.count(k) for k in range(1, 5)]


@pytest.mark.slow
def test_dual_burnside():
    from g6census.gl5 import dual_burnside
    assert dual_burnside(4) == [1, 2, 9, 118, 6473]
