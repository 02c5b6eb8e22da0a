import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from g6census.binfield import MODULI, clmul, embed, make_field
from g6census.polyform import is_irreducible


@pytest.mark.parametrize("k", range(1, 13))
def test_moduli_primitive(k):
    assert is_irreducible(MODULI[k])
    F = make_field(k)
    if k > 1:
        assert F.mult_order(F.generator()) == (1 << k) - 1


@pytest.mark.parametrize("k", [1, 2, 3, 4, 6])
def test_field_axioms_exhaustive(k):
    F = make_field(k)
    q = 1 << k
    for a in range(1, q):
        assert F.mul(a, F.inv(a)) == 1
        assert F.sqrt(F.mul(a, a)) == a
        assert F.pow(a, q - 1) == 1
    # distributivity on a sample
    rng = random.Random(k)
    for _ in range(200):
        a, b, c = (rng.randrange(q) for _ in range(3))
        assert F.mul(a, b ^ c) == F.mul(a, b) ^ F.mul(a, c)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, (1 << 10) - 1), st.integers(0, (1 << 10) - 1))
def test_mul_matches_clmul_mod(a, b):
    F = make_field(10)
    r = clmul(a, b)
    m = MODULI[10]
    for i in range(r.bit_length() - 1, 9, -1):
        if r >> i & 1:
            r ^= m << (i - 10)
    assert F.mul(a, b) == r


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6])
def test_trace_is_linear_and_onto(k):
    F = make_field(k)
    vals = [F.trace(x) for x in range(1 << k)]
    assert sum(vals) == (1 << k) // 2
    for a, b in itertools.product(range(min(16, 1 << k)), repeat=2):
        assert vals[a ^ b] == vals[a] ^ vals[b]


@pytest.mark.parametrize("d,k", [(1, 2), (2, 4), (2, 6), (3, 6), (1, 6), (4, 12)])
def test_embedding_is_homomorphism(d, k):
    small, big = make_field(d), make_field(k)
    rng = random.Random(d * 100 + k)
    for _ in range(300):
        a, b = rng.randrange(1 << d), rng.randrange(1 << d)
        assert embed(small.mul(a, b), d, k) == big.mul(embed(a, d, k), embed(b, d, k))
        assert embed(a ^ b, d, k) == embed(a, d, k) ^ embed(b, d, k)


def test_embeddings_compatible():
    # F_4 -> F_16 -> F_{2^12} equals F_4 -> F_{2^12}
    for a in range(4):
        assert embed(embed(a, 2, 4), 4, 12) == embed(a, 2, 12)


def test_embed_rejects_non_divisor():
    with pytest.raises(ValueError):
        embed(1, 3, 4)


def test_minpoly_degree():
    F = make_field(6)
    for a in range(1, 64):
        assert F.minpoly(a).bit_length() - 1 == F.degree_of(a)
