import random

from hypothesis import given, strategies as st

from g6census.gf2 import combine, echelon, kernel, rank, reduce, solve


@given(st.lists(st.integers(0, (1 << 12) - 1), max_size=15))
def test_echelon_fully_reduced(vecs):
    rows = echelon(vecs)
    for b, r in rows.items():
        assert r.bit_length() - 1 == b
        for b2, r2 in rows.items():
            if b2 != b:
                assert not r2 >> b & 1
    for v in vecs:
        assert reduce(v, rows) == 0
    assert rank(vecs) == len(rows)


@given(st.lists(st.integers(0, (1 << 10) - 1), min_size=1, max_size=12), st.integers(0, 4095))
def test_solve_and_kernel(cols, x):
    x &= (1 << len(cols)) - 1
    target = combine(cols, x)
    y = solve(cols, target)
    assert y is not None and combine(cols, y) == target
    for k in kernel(cols):
        assert combine(cols, k) == 0
    assert len(kernel(cols)) == len(cols) - rank(cols)


def test_solve_inconsistent():
    assert solve([1, 2], 4) is None


def test_combine_offset():
    rng = random.Random(0)
    basis = [rng.getrandbits(20) for _ in range(5)]
    assert combine(basis, 0b101, offset=7) == basis[0] ^ basis[2] ^ 7
