from fractions import Fraction

import pytest

from g6census.strata.bielliptic import (BASES, BIRCH_MOMENTS, biell_mass_closed_form,
                                        biell_mass_integral, biell_units, birch_moment,
                                        covers_for, divisor_data, dn_series, elliptic,
                                        integrated_series, weierstrass_traces)
from g6census.weilzeta import admissible, counts_to_lpoly


def test_bases():
    orders = sorted(elliptic(b).order() for b in range(len(BASES)))
    assert orders == [1, 2, 3, 4, 5]
    # 31 * #E(F_2) effective divisors of degree 5 per base
    assert len(biell_units()) == 31 * 15


def test_closed_form_values():
    assert biell_mass_closed_form(6, 2) == 742
    assert biell_mass_closed_form(6, 3) == 52269
    with pytest.raises(ValueError):
        biell_mass_closed_form(5, 2)


@pytest.mark.parametrize("q", [3, 5, 7])
def test_closed_form_equals_sweep(q):
    for g in range(6, 12):
        assert biell_mass_integral(g, q) == biell_mass_closed_form(g, q)


def test_closed_form_equals_sum_over_f2_curves():
    for g in range(6, 12):
        assert biell_mass_integral(g, 2) == biell_mass_closed_form(g, 2)


@pytest.mark.parametrize("q", [3, 5, 7])
def test_birch_moments(q):
    assert sum((w for _, w in weierstrass_traces(q)), Fraction(0)) == q
    for n in range(0, 9):
        expect = BIRCH_MOMENTS[n](q) if n % 2 == 0 else 0
        assert birch_moment(q, n) == expect


@pytest.mark.parametrize("q", [3, 5, 7])
def test_integrated_series(q):
    s = integrated_series(q, 9)
    assert s == [q, 0, -1, 0, -1, 0, -1, 0, -1, 0]


def test_dn_series_small():
    assert dn_series(0, 2, 4) == [1, 3, 6, 12, 18]


def _divides(f, g):
    """Exact division of integer polynomials (low degree first)."""
    r = list(g)
    for i in range(len(g) - len(f), -1, -1):
        c = Fraction(r[i + len(f) - 1], f[-1])
        if c.denominator != 1:
            return False
        for j, x in enumerate(f):
            r[i + j] -= c * x
    return all(v == 0 for v in r)


@pytest.mark.parametrize("unit", [0, 17, 100, 250, 400])
def test_covers_jacobian_contains_base(unit):
    # L_E divides L_C since Jac(C) ~ E x Prym
    b, D = biell_units()[unit]
    E = elliptic(b)
    a = 3 - E.order()
    for c in covers_for(b, D):
        w = counts_to_lpoly(c.counts, 2, 6)
        assert admissible(w)
        assert _divides([1, -a, 2], list(w.lpoly))
        assert c.aut_order % 2 == 0
        assert c.model().startswith(f"biell:{b}:")


def test_divisor_space_dimensions():
    b, D = biell_units()[3]
    data = divisor_data(b, D)
    # L(2D) has dimension 10, the Artin-Schreier image of L(D) dimension 4
    assert len(data.l2_vecs) == 10
    assert len(data.wp_rows) == 4
