import numpy as np

from g6census.strata.trigonal import (t0_ambient, t0_split_products, t2_ambient,
                                      x1_closed_points, x1_stabilizer)
from g6census.weilzeta import admissible, counts_to_lpoly


def test_ambient_groups():
    a0, a2 = t0_ambient(), t2_ambient()
    assert len(a0.group) == 36            # PGL_2 x PGL_2
    assert len(a2.group) == 48            # Aut of the Hirzebruch surface F_2
    assert len(a0.rational) == 9
    assert len(a2.rational) == 9


def test_linear_stabilizer_is_subgroup():
    # the order-8 stabilizer inside PGL_2 x PGL_3 sits in the order-48 group
    assert len(x1_stabilizer()) == 8


def test_x1_point_counts():
    # X_1 = F_2 is a P^1-bundle over P^1: (2^d + 1)^2 points over F_{2^d}
    pts = x1_closed_points(4)
    by_deg = [sum(1 for d, _ in pts if d == k) for k in range(1, 5)]
    N = [sum(d * by_deg[d - 1] for d in range(1, k + 1) if k % d == 0) for k in range(1, 5)]
    assert N == [(2 ** k + 1) ** 2 for k in range(1, 5)]


def test_group_acts_on_forms():
    a2 = t2_ambient()
    rng = np.random.default_rng(0)
    vecs = rng.integers(0, 1 << a2.dim, 64).astype(np.int64)
    from g6census.groupact import apply_tables
    for tab in a2.tables[:8]:
        img = apply_tables(tab, vecs)
        # bijective on the sample (no collisions unless vecs collide)
        assert len(set(img.tolist())) == len(set(vecs.tolist()))


def test_split_products_are_inadmissible():
    # reducible (3,4)-forms whose components meet only in points of degree
    # >= 7 pass the point search; every one of them fails the Weil test
    a0 = t0_ambient()
    passing = [f for f in sorted(t0_split_products()) if a0.table.certify(f).smooth]
    assert len(passing) == 702
    counts = a0.table.counts(np.array(passing, dtype=np.int64))
    for c in counts:
        assert not admissible(counts_to_lpoly(c, 2, 6))
