from hypothesis import given, strategies as st

from g6census.polyform import (Form, factor, gcd, irreducibles, pdivmod, pmul, ppow, psquare,
                               resultant2, form_dim, monomials)


def test_irreducible_counts():
    # necklace numbers over F_2
    assert [len(irreducibles(d)) for d in range(1, 9)] == [2, 1, 2, 3, 6, 9, 18, 30]


@given(st.integers(1, 1 << 16), st.integers(1, 1 << 10))
def test_divmod(a, b):
    q, r = pdivmod(a, b)
    assert pmul(q, b) ^ r == a
    assert r.bit_length() < b.bit_length()


@given(st.integers(1, 1 << 14))
def test_factor_roundtrip(a):
    prod = 1
    for f, e in factor(a):
        prod = pmul(prod, ppow(f, e))
    assert prod == a


def test_square_and_gcd():
    a = 0b1011
    assert psquare(a) == pmul(a, a)
    assert gcd(pmul(a, 0b111), pmul(a, 0b11)) == a


def test_resultant_common_root():
    assert resultant2(0b111, pmul(0b111, 0b11)) == 0
    assert resultant2(0b111, 0b1011) == 1


def test_form_dims():
    assert form_dim((3,), (5,)) == 21
    assert form_dim((2, 2), (3, 4)) == 20
    assert len(monomials(3, 2)) == 6
    f = Form((3,), (5,), 0x1234)
    assert Form.from_hex((3,), (5,), f.hex()) == f
