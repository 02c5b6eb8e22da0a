from fractions import Fraction

import pytest

from g6census.strata.hyperelliptic import (HypModel, act, automorphisms, hx_counts,
                                           hx_enumerate, hx_is_smooth, hx_isomorphic,
                                           naive_census, weighted_mass)
from g6census.weilzeta import admissible, counts_to_lpoly


@pytest.mark.parametrize("g,mass", [(2, 8), (3, 32)])
def test_small_genus_against_naive(g, mass):
    models = hx_enumerate(g)
    n, naive_mass, orbits = naive_census(g)
    assert len(models) == n
    assert weighted_mass(models) == naive_mass == Fraction(mass)


def test_g2_classes_pairwise_non_isomorphic():
    models = hx_enumerate(2)
    for i, a in enumerate(models):
        for b in models[i + 1:]:
            assert hx_isomorphic(a, b) is None


def test_isomorphism_witness():
    from g6census.groupact import pgl2
    m = hx_enumerate(3)[5]
    # apply some (A, R) and recover a witness
    A = pgl2()[3]
    q2, p2 = act(A, 0b11, m.q, m.p, 3)
    m2 = HypModel(q2, p2, 3)
    w = hx_isomorphic(m2, m)
    assert w is not None
    assert act(w[0], w[1], m.q, m.p, 3) == (m2.q, m2.p)


def test_smoothness_examples():
    # y^2 + y = x^13 + ... has genus 6 and is smooth
    assert hx_is_smooth(HypModel(1, (1 << 13) | 1, 6))
    # q = 0 is never smooth in characteristic 2
    assert not hx_is_smooth(HypModel(0, (1 << 13) | 1, 6))
    # degree too small for genus 6
    assert not hx_is_smooth(HypModel(1, (1 << 9) | 1, 6))


def test_automorphisms_contain_involution():
    m = HypModel(1, (1 << 13) | 1, 6)
    auts = automorphisms(m)
    assert len(auts) % 2 == 0
    ident = ((1, 2), 0)
    assert ident in auts and ((1, 2), m.q) in auts


def test_counts_admissible():
    for m in hx_enumerate(6, (0, 400))[:30]:
        assert admissible(counts_to_lpoly(hx_counts(m), 2, 6))
