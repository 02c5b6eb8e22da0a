import itertools
import random

import numpy as np
import pytest

from g6census.groupact import (FINGERPRINT_NAMES, GROUP_NAMES, apply_columns, apply_tables,
                               fingerprint, fingerprint_from_orders, gl_elements, gl_order,
                               identity, linear_tables, mat_order, matmul, pgl2, psi_matrix,
                               substitution_matrix, wedge2)


def test_gl_orders():
    assert [len(gl_elements(n)) for n in (1, 2, 3)] == [1, 6, 168]
    assert gl_order(5) == 9999360
    assert len(pgl2()) == 6


def _compose_cols(a, b):
    return [apply_columns(a, c) for c in b]


@pytest.mark.parametrize("n", [3, 7])
def test_psi_anti_homomorphism(n):
    # substitution reverses the order of composition
    G = pgl2()
    for A, B in itertools.product(G, repeat=2):
        lhs = psi_matrix(matmul(A, B), n)
        rhs = _compose_cols(psi_matrix(B, n), psi_matrix(A, n))
        assert lhs == rhs


def test_wedge2_is_homomorphism():
    rng = random.Random(1)
    G = gl_elements(3)
    # embed GL_3 block-diagonally with a fixed GL_2 into GL_5
    for _ in range(40):
        a, b = rng.choice(G), rng.choice(G)
        A = tuple(list(a) + [8, 16])
        B = tuple(list(b) + [16, 8])
        assert wedge2(matmul(A, B)) == matmul(wedge2(A), wedge2(B))
    assert wedge2(identity(5)) == identity(10)


def test_linear_tables_match_columns():
    rng = random.Random(3)
    cols = [rng.getrandbits(21) for _ in range(21)]
    tab = linear_tables(cols)
    vecs = np.array([rng.getrandbits(21) for _ in range(200)], dtype=np.int64)
    got = apply_tables(tab, vecs)
    assert got.tolist() == [apply_columns(cols, int(v)) for v in vecs]


def test_substitution_is_action_on_quintics():
    G = gl_elements(3)
    rng = random.Random(5)
    for _ in range(10):
        A, B = rng.choice(G), rng.choice(G)
        cAB = substitution_matrix((3,), (5,), (matmul(A, B),))
        cA = substitution_matrix((3,), (5,), (A,))
        cB = substitution_matrix((3,), (5,), (B,))
        # F(ABx) = (F o A) o B
        assert cAB == _compose_cols(cB, cA)


def test_fingerprints():
    assert len(GROUP_NAMES) == 12
    orders = [mat_order(M) for M in gl_elements(2)]
    assert fingerprint_from_orders(orders).name == "S3"
    assert fingerprint_from_orders([1, 2, 4, 4]).name == "C4"
    assert fingerprint_from_orders([1, 2, 2, 2]).name == "C2xC2"
    assert fingerprint_from_orders([1, 3, 3, 3]).name is None
    # cyclic group of order 5 as integers mod 5
    fp = fingerprint(range(5), lambda a, b: (a + b) % 5, 0)
    assert fp.name == "C5"
    assert all(fp.order in (1, 2, 3, 4, 5, 6, 10, 20, 60) for fp in FINGERPRINT_NAMES)


def test_fingerprint_closure_check():
    with pytest.raises(ValueError):
        fingerprint([0, 1, 2], lambda a, b: (a + b) % 4, 0)
