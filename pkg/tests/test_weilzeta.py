from fractions import Fraction

import pytest

from g6census.weilzeta import (WeilError, admissible, closed_point_counts, counts_to_lpoly,
                               isogeny_prefilter, load_isogeny_list, lpoly_to_counts,
                               newton_polygon_of, save_isogeny_list, unitary)


def _ell_product_lpoly(traces, q=2):
    p = [1]
    for a in traces:
        f = [1, -a, q]
        out = [0] * (len(p) + 2)
        for i, x in enumerate(p):
            for j, y in enumerate(f):
                out[i + j] += x * y
        p = out
    return tuple(p)


def test_roundtrip_product_of_elliptic():
    # the L-polynomial of a product of elliptic curves is admissible as a
    # Weil polynomial; counts -> lpoly -> counts is the identity
    lp = _ell_product_lpoly([1, -1, 0, 2, -2, 1])
    counts = lpoly_to_counts(lp, 2, 6)
    w = counts_to_lpoly(counts, 2, 6)
    assert w.lpoly == lp
    assert lpoly_to_counts(w.lpoly, 2, 6) == counts
    assert unitary(lp, 2, 6)


def test_serre_bound_rejects_11():
    # a genus-6 curve over F_2 has at most 10 points
    lp = _ell_product_lpoly([-2, -2, -2, -1, -1, 0])
    counts = lpoly_to_counts(lp, 2, 6)
    assert counts[0] == 11
    assert unitary(lp, 2, 6)
    assert not admissible(counts_to_lpoly(counts, 2, 6))



def test_non_unitary_rejected():
    # the counts of P^1 give L = 1 + 64 T^12, a valid Weil polynomial
    w = counts_to_lpoly((3, 5, 9, 17, 33, 65), 2, 6)
    assert w.lpoly == (1,) + (0,) * 11 + (64,)
    assert admissible(w)
    bad = counts_to_lpoly((10, 10, 10, 10, 10, 10), 2, 6)
    assert not admissible(bad)


def test_square_of_weil_not_admissible():
    # (1 + 2T^2)^6 is unitary with all slopes 1/2, but forces N_4 < 0
    lp = [1]
    for _ in range(6):
        out = [0] * (len(lp) + 2)
        for i, x in enumerate(lp):
            out[i] += x
            out[i + 2] += 2 * x
        lp = out
    lp = tuple(lp)
    assert unitary(lp, 2, 6)
    assert all(s == Fraction(1, 2) for s in newton_polygon_of(lp, 2))
    counts = lpoly_to_counts(lp, 2, 6)
    assert counts[3] < 0
    assert not admissible(counts_to_lpoly(counts, 2, 6))


def test_non_integral_raises():
    with pytest.raises(WeilError):
        counts_to_lpoly((3, 4, 9, 17, 33, 65), 2, 6)


def test_closed_points():
    # P^1: one closed point of each degree count N_d(F_2)
    counts = [2 ** d + 1 for d in range(1, 7)]
    assert closed_point_counts(counts) == [3, 1, 2, 3, 6, 9]


def test_newton_ordinary():
    lp = _ell_product_lpoly([1] * 6)
    assert newton_polygon_of(lp, 2) == (0,) * 6 + (1,) * 6


def test_isogeny_list_io(tmp_path):
    lp = _ell_product_lpoly([1, -1, 0, 2, -2, 1])
    path = tmp_path / "iso.txt"
    save_isogeny_list({lp}, path)
    assert load_isogeny_list(path) == {lp}
    keep = isogeny_prefilter({lp})
    assert keep(lpoly_to_counts(lp, 2, 6))
    assert not keep((0,) * 6)
    path.write_text("1,2,3\n")
    with pytest.raises(WeilError):
        load_isogeny_list(path)
    assert isogeny_prefilter(set())((0,) * 6)
