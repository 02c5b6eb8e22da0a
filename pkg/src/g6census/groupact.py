"""Matrix groups over F_2 and their actions on polynomials, forms and points.

An n x n matrix over F_2 is a tuple of n row bitmasks (bit j of row i is
the (i, j) entry).  Products of groups are tuples of such matrices.

Convention for the twisted substitution action on binary forms of degree n:
psi_n(A)(q)(x) = (cx + d)^n q((ax + b)/(cx + d)), which is substitution of
(X, Z) -> A (X, Z) into the binary form.  Substitution reverses composition,
so psi_n(AB) = psi_n(B) o psi_n(A).
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .polyform import form_basis, monomial_index, pmul, ppow

# ------------------------------------------------------------ matrices


def identity(n: int) -> tuple:
    return tuple(1 << i for i in range(n))


def matvec(M, v: int) -> int:
    r = 0
    for i, row in enumerate(M):
        r |= (bin(row & v).count("1") & 1) << i
    return r


def matmul(A, B) -> tuple:
    """Product AB (rows of A combine rows of B)."""
    out = []
    for row in A:
        acc, j = 0, 0
        while row:
            if row & 1:
                acc ^= B[j]
            row >>= 1
            j += 1
        out.append(acc)
    return tuple(out)


def transpose(M, n: int | None = None) -> tuple:
    n = len(M) if n is None else n
    return tuple(sum(((M[i] >> j) & 1) << i for i in range(len(M))) for j in range(n))


def rank(rows) -> int:
    rows = [r for r in rows if r]
    rk = 0
    while rows:
        piv = max(rows)
        hb = piv.bit_length() - 1
        rows = [r ^ piv if r >> hb & 1 else r for r in rows if r != piv]
        rows = [r for r in rows if r]
        rk += 1
    return rk


def inverse(M) -> tuple:
    n = len(M)
    aug = [(M[i], 1 << i) for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][0] >> col & 1), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        for r in range(n):
            if r != col and aug[r][0] >> col & 1:
                aug[r] = (aug[r][0] ^ aug[col][0], aug[r][1] ^ aug[col][1])
    return tuple(a[1] for a in aug)


def det(M) -> int:
    return 1 if rank(M) == len(M) else 0


def mat_order(M) -> int:
    n, P, I = 1, M, identity(len(M))
    while P != I:
        P = matmul(P, M)
        n += 1
    return n


def gl_elements(n: int) -> list[tuple]:
    """All of GL_n(F_2) in a fixed order (lexicographic in the rows)."""
    out = []

    def rec(rows, span):
        if len(rows) == n:
            out.append(tuple(rows))
            return
        for r in range(1, 1 << n):
            if r not in span:
                rec(rows + [r], span | {s ^ r for s in span})

    rec([], {0})
    return out


def gl_order(n: int, q: int = 2) -> int:
    o = 1
    for i in range(n):
        o *= q ** n - q ** i
    return o


def pgl2() -> list[tuple]:
    return gl_elements(2)


# ------------------------------------------------------------ psi action


def psi_action(A, n: int, q: int) -> int:
    """(cx+d)^n q((ax+b)/(cx+d)) for A = ((a,b),(c,d)) given as row bitmasks."""
    a, b = A[0] & 1, A[0] >> 1 & 1
    c, d = A[1] & 1, A[1] >> 1 & 1
    num = (a << 1) | b   # ax + b
    den = (c << 1) | d   # cx + d
    r = 0
    i = 0
    while q:
        if q & 1:
            r ^= pmul(ppow(num, i), ppow(den, n - i))
        q >>= 1
        i += 1
    return r


def psi_matrix(A, n: int) -> list[int]:
    """Columns of psi_n(A) on the basis 1, x, ..., x^n."""
    return [psi_action(A, n, 1 << i) for i in range(n + 1)]


def apply_columns(cols, v: int) -> int:
    r, i = 0, 0
    while v:
        if v & 1:
            r ^= cols[i]
        v >>= 1
        i += 1
    return r


# ---------------------------------------------------------- exterior square

PLUCKER_PAIRS = tuple(itertools.combinations(range(5), 2))
PAIR_INDEX = {p: i for i, p in enumerate(PLUCKER_PAIRS)}


def wedge_vectors(u: int, v: int, n: int = 5) -> int:
    """u ^ v in the Plucker basis e_i ^ e_j, i < j, lex order."""
    r = 0
    for idx, (i, j) in enumerate(PLUCKER_PAIRS):
        if ((u >> i & 1) & (v >> j & 1)) ^ ((u >> j & 1) & (v >> i & 1)):
            r |= 1 << idx
    return r


@lru_cache(maxsize=None)
def _wedge_table():
    return np.array([[wedge_vectors(a, b) for b in range(32)] for a in range(32)], dtype=np.int64)


def wedge2(M) -> tuple:
    """Matrix of M acting on the exterior square (10 x 10, row bitmasks)."""
    if rank(M) != 5:
        raise ValueError("wedge2 of a singular matrix")
    cols5 = transpose(M, 5)
    cols = [wedge_vectors(cols5[i], cols5[j]) for i, j in PLUCKER_PAIRS]
    return transpose(cols, 10)


def plucker_relations() -> list[dict]:
    """The five Plucker quadrics as {((i,j),(k,l)): 1} over F_2.

    For a < b < c < d the relation p_ab p_cd + p_ac p_bd + p_ad p_bc.
    """
    rels = []
    for omit in range(5):
        a, b, c, d = [i for i in range(5) if i != omit]
        rels.append([((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))])
    return rels


def plucker_eval(rel, p, F) -> int:
    """Evaluate one relation at Plucker vector p (list of 10 field elements)."""
    r = 0
    for s, t in rel:
        r ^= F.mul(p[PAIR_INDEX[s]], p[PAIR_INDEX[t]])
    return r


# ---------------------------------------------------------- forms

def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea in a:
        for eb in b:
            e = tuple(x + y for x, y in zip(ea, eb))
            if e in out:
                del out[e]
            else:
                out[e] = 1
    return out


def _linear_image(M, var: int, n: int) -> dict:
    # x_var -> sum_j M[var][j] x_j
    row = M[var]
    out = {}
    for j in range(n):
        if row >> j & 1:
            e = [0] * n
            e[j] = 1
            out[tuple(e)] = 1
    return out


def substitution_matrix(blocks, degrees, mats) -> list[int]:
    """Columns (as bit-vectors) of F -> F(M_1 x^(1), ..., M_r x^(r))."""
    blocks, degrees = tuple(blocks), tuple(degrees)
    basis = form_basis(blocks, degrees)
    index = monomial_index(blocks, degrees)
    lin = [[_linear_image(M, v, n) for v in range(n)] for M, n in zip(mats, blocks)]
    cols = []
    for mono in basis:
        per_block = []
        for bi, exps in enumerate(mono):
            p = {(0,) * blocks[bi]: 1}
            for v, e in enumerate(exps):
                for _ in range(e):
                    p = _poly_mul(p, lin[bi][v])
            per_block.append(p)
        col = 0
        for combo in itertools.product(*[list(p) for p in per_block]):
            col ^= 1 << index[combo]
        cols.append(col)
    return cols


def act_on_form(blocks, degrees, g, coeffs: int) -> int:
    """g . F = F o g^{-1}, so that Z(g . F) = g Z(F)."""
    inv = tuple(inverse(M) for M in g)
    return apply_columns(substitution_matrix(blocks, degrees, inv), coeffs)


def linear_tables(cols, chunk: int = 8) -> np.ndarray:
    """Lookup tables applying a linear map given by its columns in chunks."""
    n = len(cols)
    nch = (n + chunk - 1) // chunk
    tab = np.zeros((nch, 1 << chunk), dtype=np.int64)
    for c in range(nch):
        base = cols[c * chunk:(c + 1) * chunk]
        for v in range(1 << chunk):
            tab[c, v] = apply_columns(base, v & ((1 << len(base)) - 1))
    return tab


def apply_tables(tab: np.ndarray, vecs: np.ndarray, chunk: int = 8) -> np.ndarray:
    out = np.zeros_like(vecs)
    mask = (1 << chunk) - 1
    for c in range(tab.shape[0]):
        out ^= tab[c][(vecs >> (c * chunk)) & mask]
    return out


# ---------------------------------------------------------- points

def act_on_point(g, point):
    """Apply a tuple of matrices blockwise to a point of F_2-coordinates."""
    return tuple(matvec(M, v) for M, v in zip(g, point))


def compose(g, h):
    """Blockwise product g h (apply h first)."""
    return tuple(matmul(A, B) for A, B in zip(g, h))


def group_identity(blocks):
    return tuple(identity(n) for n in blocks)


def product_group(*groups):
    return [tuple(x) for x in itertools.product(*groups)]


def stabilizer(obj, elements, action) -> list:
    """Elements g with action(g, obj) == obj, by exhaustive scan."""
    return [g for g in elements if action(g, obj) == obj]


# ---------------------------------------------------------- fingerprints


@dataclass(frozen=True)
class GroupFingerprint:
    order: int
    element_orders: tuple  # sorted (order, multiplicity) pairs

    @property
    def name(self) -> str | None:
        return FINGERPRINT_NAMES.get(self)


def _fp(orders: dict) -> GroupFingerprint:
    return GroupFingerprint(sum(orders.values()), tuple(sorted(orders.items())))


FINGERPRINT_NAMES = {
    _fp({1: 1}): "C1",
    _fp({1: 1, 2: 1}): "C2",
    _fp({1: 1, 3: 2}): "C3",
    _fp({1: 1, 2: 1, 4: 2}): "C4",
    _fp({1: 1, 2: 3}): "C2xC2",
    _fp({1: 1, 5: 4}): "C5",
    _fp({1: 1, 2: 1, 3: 2, 6: 2}): "C6",
    _fp({1: 1, 2: 3, 3: 2}): "S3",
    _fp({1: 1, 2: 1, 5: 4, 10: 4}): "C10",
    _fp({1: 1, 2: 5, 5: 4}): "D5",
    _fp({1: 1, 2: 11, 5: 4, 10: 4}): "D10",
    _fp({1: 1, 2: 15, 3: 20, 5: 24}): "A5",
}
GROUP_NAMES = tuple(FINGERPRINT_NAMES.values())


def element_order(g, mul, one) -> int:
    n, p = 1, g
    while p != one:
        p = mul(p, g)
        n += 1
        if n > 10000:
            raise ValueError("element of unbounded order")
    return n


def fingerprint(elements, mul, one, check_closure: int = 64) -> GroupFingerprint:
    """Order and element-order multiset of a finite group given as a list."""
    elements = list(elements)
    eset = set(elements)
    if one not in eset:
        raise ValueError("identity missing")
    # sampled closure check
    step = max(1, len(elements) // 8)
    sample = elements[::step][:check_closure]
    for a in sample:
        for b in sample:
            if mul(a, b) not in eset:
                raise ValueError("element list is not closed under composition")
    orders = Counter(element_order(g, mul, one) for g in elements)
    return _fp(dict(orders))


def matrix_group_fingerprint(elements) -> GroupFingerprint:
    one = group_identity([len(M) for M in elements[0]])
    return fingerprint(elements, compose, one)


def fingerprint_from_orders(orders) -> GroupFingerprint:
    """Fingerprint from the list of element orders of a group."""
    return _fp(dict(Counter(orders)))
