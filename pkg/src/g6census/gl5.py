"""GL_5(F_2) and its action on alternating forms (the dual Plucker space).

A matrix is packed as 25 bits, row i in bits 5i..5i+4 (bit j of row i is
the (i, j) entry).  An alternating form on F_2^5 is a 10-bit vector over
the basis e_a* ^ e_b* (a < b, lex order), so that
omega(u, v) = parity(omega & wedge(u, v)).  The action is the pullback
omega -> omega(A., A.): bit (i, j) of the image is omega(A e_i, A e_j), so
the image of omega is sum_{i<j} parity(omega & wedge(col_i, col_j)) e_ij.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ._accel import USE_NUMBA, njit
from .groupact import PLUCKER_PAIRS, _wedge_table

GL5_ORDER = 9999360
NFORMS = 1023

_PI = np.array([p[0] for p in PLUCKER_PAIRS], dtype=np.int64)
_PJ = np.array([p[1] for p in PLUCKER_PAIRS], dtype=np.int64)


# ------------------------------------------------------------ enumeration


@njit
def _enum_numba(out):
    n = 0
    for r0 in range(1, 32):
        s0 = np.zeros(32, dtype=np.bool_)
        s0[0] = True
        s0[r0] = True
        for r1 in range(1, 32):
            if s0[r1]:
                continue
            s1 = s0.copy()
            for v in range(32):
                if s0[v]:
                    s1[v ^ r1] = True
            for r2 in range(1, 32):
                if s1[r2]:
                    continue
                s2 = s1.copy()
                for v in range(32):
                    if s1[v]:
                        s2[v ^ r2] = True
                for r3 in range(1, 32):
                    if s2[r3]:
                        continue
                    s3 = s2.copy()
                    for v in range(32):
                        if s2[v]:
                            s3[v ^ r3] = True
                    for r4 in range(1, 32):
                        if s3[r4]:
                            continue
                        out[n] = r0 | (r1 << 5) | (r2 << 10) | (r3 << 15) | (r4 << 20)
                        n += 1
    return n


def _enum_numpy():
    # grow row lists, tracking the span as a 32-bit membership mask
    rows = np.zeros((1, 0), dtype=np.int64)
    span = np.ones(1, dtype=np.int64)  # bit v set iff v in span
    cand = np.arange(32, dtype=np.int64)
    for _ in range(5):
        ok = ((span[:, None] >> cand[None, :]) & 1) == 0
        i, c = np.nonzero(ok)
        new_rows = np.concatenate([rows[i], c[:, None]], axis=1)
        old = span[i]
        shifted = np.zeros_like(old)
        for v in range(32):
            member = (old >> v) & 1
            shifted |= member << (v ^ c)
        rows, span = new_rows, old | shifted
    packed = np.zeros(rows.shape[0], dtype=np.int64)
    for r in range(5):
        packed |= rows[:, r] << (5 * r)
    return packed


@lru_cache(maxsize=1)
def gl5_elements() -> np.ndarray:
    """All of GL_5(F_2), packed, in a fixed order."""
    if USE_NUMBA:
        out = np.empty(GL5_ORDER, dtype=np.int64)
        n = _enum_numba(out)
        out = out[:n]
    else:
        out = _enum_numpy()
    if out.size != GL5_ORDER:
        raise RuntimeError("GL_5(F_2) enumeration has the wrong size")
    return np.sort(out)


def unpack(m: int) -> tuple:
    return tuple((int(m) >> (5 * r)) & 31 for r in range(5))


def pack(rows) -> int:
    return sum(int(r) << (5 * i) for i, r in enumerate(rows))


# ------------------------------------------------------------ action on forms


def _columns(packed):
    """Columns of packed matrices as 5-bit ints (array (m, 5))."""
    packed = np.asarray(packed, dtype=np.int64)
    cols = np.zeros(packed.shape + (5,), dtype=np.int64)
    for r in range(5):
        row = (packed >> (5 * r)) & 31
        for c in range(5):
            cols[..., c] |= ((row >> c) & 1) << r
    return cols


def form_matrices(packed) -> np.ndarray:
    """Rows of the pullback map on forms: entry (m, t) is the 10-bit mask R
    with output bit t = parity(omega & R)."""
    cols = _columns(packed)
    wt = _wedge_table()
    return wt[cols[..., _PI], cols[..., _PJ]]


def _parity(x):
    x = x ^ (x >> 8)
    x = x ^ (x >> 4)
    x = x ^ (x >> 2)
    x = x ^ (x >> 1)
    return x & 1


def apply_rows(rows, forms):
    """Image of forms (array) under one pullback map given by its 10 rows."""
    forms = np.asarray(forms, dtype=np.int64)
    out = np.zeros_like(forms)
    for t in range(10):
        out |= _parity(forms & rows[t]) << t
    return out


def form_perms(packed) -> np.ndarray:
    """Permutations of the 1023 nonzero forms (index = form - 1)."""
    R = form_matrices(np.atleast_1d(packed))
    forms = np.arange(1, NFORMS + 1, dtype=np.int64)
    out = np.zeros((R.shape[0], NFORMS), dtype=np.int16)
    for a in range(0, R.shape[0], 4096):
        Rc = R[a:a + 4096]
        img = np.zeros((Rc.shape[0], NFORMS), dtype=np.int64)
        for t in range(10):
            img |= _parity(forms[None, :] & Rc[:, t:t + 1]) << t
        out[a:a + 4096] = img - 1
    return out


def form_rank(omega: int) -> int:
    """Rank of the alternating matrix of a form (0, 2 or 4)."""
    M = [0] * 5
    for idx, (a, b) in enumerate(PLUCKER_PAIRS):
        if omega >> idx & 1:
            M[a] |= 1 << b
            M[b] |= 1 << a
    r = 0
    rows = list(M)
    for bit in range(5):
        piv = next((i for i in range(r, 5) if rows[i] >> bit & 1), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(5):
            if i != r and rows[i] >> bit & 1:
                rows[i] ^= rows[r]
        r += 1
    return r


# ------------------------------------------------------------ fixed points


@njit
def _rank10(m):
    """Rank of 10 row masks; destroys m."""
    r = 0
    for bit in range(10):
        piv = -1
        for i in range(r, 10):
            if (m[i] >> bit) & 1:
                piv = i
                break
        if piv < 0:
            continue
        t = m[r]
        m[r] = m[piv]
        m[piv] = t
        for i in range(10):
            if i != r and (m[i] >> bit) & 1:
                m[i] ^= m[r]
        r += 1
    return r


@njit
def _fixed_numba(packed, wt, pi, pj, kmax, out):
    # power A on the 5-dim side, then wedge: cheaper than 10 x 10 products
    A = np.empty(5, dtype=np.int64)
    P = np.empty(5, dtype=np.int64)
    Q = np.empty(5, dtype=np.int64)
    C = np.empty(5, dtype=np.int64)
    D = np.empty(10, dtype=np.int64)
    for m in range(packed.shape[0]):
        for r in range(5):
            A[r] = (packed[m] >> (5 * r)) & 31
            P[r] = A[r]
        for k in range(kmax):
            for c in range(5):
                acc = 0
                for r in range(5):
                    acc |= ((P[r] >> c) & 1) << r
                C[c] = acc
            for t in range(10):
                D[t] = wt[C[pi[t]], C[pj[t]]] ^ (1 << t)
            out[m, k] = (1 << (10 - _rank10(D))) - 1
            for r in range(5):
                acc = 0
                for j in range(5):
                    if (P[r] >> j) & 1:
                        acc ^= A[j]
                Q[r] = acc
            for r in range(5):
                P[r] = Q[r]


def _fixed_numpy(R, kmax):
    # brute force on all 1023 forms, chunked
    forms = np.arange(1, NFORMS + 1, dtype=np.int64)
    out = np.zeros((R.shape[0], kmax), dtype=np.int64)
    for a in range(0, R.shape[0], 2048):
        Rc = R[a:a + 2048]
        cur = np.broadcast_to(forms, (Rc.shape[0], NFORMS)).copy()
        for k in range(kmax):
            nxt = np.zeros_like(cur)
            for t in range(10):
                nxt |= _parity(cur & Rc[:, t:t + 1]) << t
            cur = nxt
            out[a:a + 2048, k] = np.count_nonzero(cur == forms, axis=1)
    return out


def fixed_counts(packed, kmax: int = 4, backend=None) -> np.ndarray:
    """#fixed nonzero forms of A^k, k = 1..kmax (the action on the 1023
    points is linear, so these are 2^dim(ker(A^k - 1)) - 1)."""
    packed = np.ascontiguousarray(np.atleast_1d(packed), dtype=np.int64)
    use_nb = USE_NUMBA if backend is None else backend == "numba"
    if use_nb:
        out = np.zeros((packed.shape[0], kmax), dtype=np.int64)
        _fixed_numba(packed, _wedge_table(), _PI, _PJ, kmax, out)
        return out
    return _fixed_numpy(np.ascontiguousarray(form_matrices(packed)), kmax)


def cycle_counts_from_fixed(fixed) -> np.ndarray:
    """Cycle counts c_1..c_K of a permutation from fixed-point counts of its
    powers: k c_k = sum_{d | k} mu(k/d) fix(g^d)."""
    fixed = np.asarray(fixed, dtype=np.int64)
    K = fixed.shape[1]
    mu = {1: 1, 2: -1, 3: -1, 4: 0, 5: -1, 6: 1}
    out = np.zeros_like(fixed)
    for k in range(1, K + 1):
        acc = np.zeros(fixed.shape[0], dtype=np.int64)
        for d in range(1, k + 1):
            if k % d == 0:
                acc += mu[k // d] * fixed[:, d - 1]
        out[:, k - 1] = acc // k
    return out


@lru_cache(maxsize=None)
def dual_burnside(K: int = 4):
    """Orbits of GL_5(F_2) on k-subsets of the 1023 forms, k = 0..K."""
    from .orbitree import subset_orbit_counts_from_cycles
    cc = cycle_counts_from_fixed(fixed_counts(gl5_elements(), K))
    key = np.zeros(cc.shape[0], dtype=np.int64)
    for k in range(K):
        key |= cc[:, k] << (11 * k)
    uniq, first, mult = np.unique(key, return_index=True, return_counts=True)
    rows = cc[first]
    return subset_orbit_counts_from_cycles(rows, GL5_ORDER, K, weights=mult)


# ------------------------------------------------------------ generators


def generators() -> list[int]:
    """A transvection and a 5-cycle permutation matrix, which generate GL_5(F_2)."""
    t = pack([1 | 2, 2, 4, 8, 16])
    c = pack([2, 4, 8, 16, 1])
    return [t, c]


def mat_mul(a: int, b: int) -> int:
    A, B = unpack(a), unpack(b)
    out = []
    for r in A:
        acc = 0
        for j in range(5):
            if r >> j & 1:
                acc ^= B[j]
        out.append(acc)
    return pack(out)


def mat_inv(a: int) -> int:
    rows = list(unpack(a))
    inv = [1 << i for i in range(5)]
    for c in range(5):
        piv = next(i for i in range(c, 5) if rows[i] >> c & 1)
        rows[c], rows[piv] = rows[piv], rows[c]
        inv[c], inv[piv] = inv[piv], inv[c]
        for i in range(5):
            if i != c and rows[i] >> c & 1:
                rows[i] ^= rows[c]
                inv[i] ^= inv[c]
    return pack(inv)
