import numpy as np
import pytest

from g6census.binfield import make_field
from g6census.groupact import apply_tables, plucker_eval, plucker_relations
from g6census.strata.generic import (QMONS, REDUCED_DIM, S5_CLASSES, SweepStats, bn_sweep,
                                     count_traces, gaussian_binomial, grassmannian_points,
                                     quadric_space, s5_class, s5_signature,
                                     surface_census, surface_filter, surface_group,
                                     surface_points, surface_table, unpack_point)
from g6census.weilzeta import admissible, counts_to_lpoly

CLASS_SIZES = {"1^5": 1, "2.1^3": 10, "2^2.1": 15, "3.1^2": 20, "3.2": 20, "4.1": 30, "5": 24}


@pytest.fixture(scope="module")
def surfaces():
    return surface_census()


@pytest.mark.parametrize("k", [1, 2])
def test_grassmannian(k):
    pts = grassmannian_points(k)
    assert len(pts) == len(set(pts)) == gaussian_binomial(5, 2, 2 ** k)
    assert len(grassmannian_points(1)) == 155


def test_s5_table_burnside():
    # the average number of fixed points of S_5 on 5 letters (and of its
    # powers) is an integer count of orbits
    assert sum(CLASS_SIZES.values()) == 120
    for k in range(1, 7):
        tot = sum(CLASS_SIZES[c] * s5_signature(ct)[k - 1] for c, ct in S5_CLASSES.items())
        assert tot % 120 == 0


def test_trace_helpers():
    assert count_traces((15, 37, 105, 337)) == (5, 5, 5, 5)
    assert count_traces((14, 37, 105, 337)) is None
    assert s5_class((5, 17, 65, 257)) == "5"
    assert surface_filter((15, 37, 105, 337), (0, 0, 0, 0))
    assert not surface_filter((15, 37, 105, 337), (3, 5, 9, 17))


def test_census_17_7(surfaces):
    assert len(surfaces) == 17
    smooth = [s for s in surfaces if s.smooth]
    assert len(smooth) == 7
    assert sorted(s.label for s in smooth) == sorted(S5_CLASSES)
    for s in smooth:
        # Aut(S) is the centralizer of the Frobenius class in S_5
        assert s.stab_order * CLASS_SIZES[s.label] == 120
        assert s.counts == tuple(4 ** k + 2 ** k * t + 1
                                 for k, t in enumerate(s5_signature(S5_CLASSES[s.label], 4), 1))
    for s in surfaces:
        assert len(s.stab_images) == s.stab_order


def test_quadric_dims(surfaces):
    for s in surfaces:
        qs = quadric_space(s.forms)
        assert qs.quotient_dim == 21
        assert len(qs.linear_rows) == 34
        assert len(qs.free16) == REDUCED_DIM


def _qeval(q, p, F):
    r = 0
    for i, (a, b) in enumerate(QMONS):
        if q >> i & 1:
            r ^= F.mul(p[a], p[b])
    return r


def test_points_on_surface(surfaces):
    s = surfaces[9]
    F = make_field(3)
    words = surface_points(s.forms, 3)
    assert words.size == 4 ** 3 + 2 ** 3 * 5 + 1
    for w in words[:: 7].tolist():
        p = unpack_point(w, 3)
        for rel in plucker_relations():
            assert plucker_eval(rel, p, F) == 0
        for f in s.forms:
            acc = 0
            for a in range(10):
                if f >> a & 1:
                    acc ^= p[a]
            assert acc == 0


def test_quotient_well_defined(surfaces):
    rng = np.random.default_rng(0)
    F = make_field(3)
    for s in surfaces[::4]:
        qs = quadric_space(s.forms)
        pts = [unpack_point(w, 3) for w in surface_points(s.forms, 3).tolist()]
        ideal = list(qs.rows.values())
        for _ in range(5):
            q = int(rng.integers(0, 1 << 55))
            e = 0
            for r in ideal:
                if rng.integers(2):
                    e ^= r
            assert qs.normal(q) == qs.normal(q ^ e)
            assert [_qeval(q, p, F) for p in pts] == [_qeval(q ^ e, p, F) for p in pts]
            assert [_qeval(q, p, F) for p in pts] == [_qeval(qs.normal(q), p, F) for p in pts]


def test_stabilizer_preserves_verdicts(surfaces):
    idx = 12   # singular surface with a stabilizer of order 6
    T = surface_table(idx)
    tabs, orders = surface_group(idx)
    assert len(tabs) == surfaces[idx].stab_order
    combos = np.arange(1, 1 << REDUCED_DIM, 97, dtype=np.int64)
    smooth = set(T.smooth_combos().tolist())
    counts = T.counts(combos)
    for tab in tabs:
        img = apply_tables(tab, combos)
        assert [int(c) in smooth for c in img] == [int(c) in smooth for c in combos]
        ok = np.array([int(c) in smooth for c in combos])
        assert (T.counts(img)[ok] == counts[ok]).all()


def test_sweep_shard(surfaces):
    st = SweepStats()
    recs = bn_sweep(16, (7, 8), st)
    assert recs and st.reps >= len(recs)
    for r in recs:
        assert r.model.startswith("bn:16:")
        assert r.counts[0] <= 10
        assert admissible(counts_to_lpoly(r.counts, 2, 6))
        assert 5 % r.aut_order == 0
