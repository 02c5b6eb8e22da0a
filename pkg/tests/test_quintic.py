import numpy as np

from g6census.groupact import apply_tables
from g6census.polyform import Form
from g6census.smoothcert import certify_smooth
from g6census.strata.quintic import group_tables, model_string, quintic_sweep, quintic_table
from g6census.weilzeta import admissible, counts_to_lpoly


def _fermat():
    return Form.from_terms((3,), (5,), [((5, 0, 0),), ((0, 5, 0),), ((0, 0, 5),)])


def test_group_tables():
    tabs, orders = group_tables()
    assert tabs.shape[0] == 168
    assert sorted(set(orders.tolist())) == [1, 2, 3, 4, 7]


def test_fermat_smooth():
    f = _fermat()
    assert certify_smooth(quintic_table(), f.coeffs).smooth


def test_shard_records():
    recs = quintic_sweep((0, 16))
    tabs, _ = group_tables()
    assert recs
    for r in recs:
        assert 168 % r.aut_order == 0
        assert admissible(counts_to_lpoly(r.counts, 2, 6))
        assert r.model.startswith("quintic:")
    # every representative is the minimum of its orbit
    coeffs = np.array([Form.from_hex((3,), (5,), r.model.split(":")[1]).coeffs for r in recs])
    for t in tabs:
        assert (apply_tables(t, coeffs) >= coeffs).all()


def test_model_string_roundtrip():
    f = _fermat()
    s = model_string(f.coeffs)
    assert Form.from_hex((3,), (5,), s.split(":")[1]).coeffs == f.coeffs
