"""Hot loops of the census, each with a numba and a numpy implementation.

Linear data model shared by every stratum: a candidate curve is a vector c
over F_2 in some coefficient space with basis rows ``B[i]``.  For each closed
point p of the ambient, ``B[i, p]`` packs the values at p of a few F_2-linear
functionals of the i-th basis vector (the form's value and the derivatives
that decide smoothness), d = deg(p) bits per functional.  For a candidate the
packed word is W0[p] ^ XOR_{i in c} B[i, p]; the curve passes through p iff
``W & vmask[p] == 0`` and is singular at p iff ``W & smask[p] == 0``.
"""

from __future__ import annotations

import numpy as np

from ._accel import USE_NUMBA, njit

# ------------------------------------------------------------ smooth scan


@njit
def _ctz(j):
    n = 0
    while (j & 1) == 0:
        j >>= 1
        n += 1
    return n


@njit
def _smooth_scan_numba(B, W0, smask, start, stop, out):
    npts = W0.shape[0]
    W = W0.copy()
    g0 = start ^ (start >> 1)
    for i in range(B.shape[0]):
        if (g0 >> i) & 1:
            for p in range(npts):
                W[p] ^= B[i, p]
    cnt = 0
    for j in range(start, stop):
        if j > start:
            b = _ctz(j)
            for p in range(npts):
                W[p] ^= B[b, p]
        ok = True
        for p in range(npts):
            if (W[p] & smask[p]) == 0:
                ok = False
                break
        if ok:
            out[cnt] = j ^ (j >> 1)
            cnt += 1
    return cnt


def _words_numpy(B, W0, combos):
    W = np.broadcast_to(W0, (combos.shape[0], W0.shape[0])).copy()
    for i in range(B.shape[0]):
        sel = ((combos >> i) & 1).astype(bool)
        if sel.any():
            W[sel] ^= B[i]
    return W


def _smooth_scan_numpy(B, W0, smask, start, stop, chunk=1 << 13):
    found = []
    for a in range(start, stop, chunk):
        j = np.arange(a, min(stop, a + chunk), dtype=np.int64)
        combos = j ^ (j >> 1)
        W = _words_numpy(B, W0, combos)
        ok = np.all((W & smask) != 0, axis=1)
        found.append(combos[ok])
    return np.concatenate(found) if found else np.zeros(0, dtype=np.int64)


def smooth_combinations(B, W0, smask, start=0, stop=None, backend=None):
    """Gray-code sweep over span(B) (offset by W0); returns the combination
    masks whose curves have no singular point among the tabulated points.

    The sweep covers Gray indices start..stop-1, so disjoint index ranges
    partition the space (used for sharding)."""
    B = np.ascontiguousarray(B, dtype=np.int64)
    W0 = np.ascontiguousarray(W0, dtype=np.int64)
    smask = np.ascontiguousarray(smask, dtype=np.int64)
    if stop is None:
        stop = 1 << B.shape[0]
    use_nb = USE_NUMBA if backend is None else backend == "numba"
    if use_nb:
        out = np.empty(stop - start, dtype=np.int64)
        n = _smooth_scan_numba(B, W0, smask, start, stop, out)
        res = out[:n]
    else:
        res = _smooth_scan_numpy(B, W0, smask, start, stop)
    return np.sort(res)


# ------------------------------------------------------------ point counts


@njit
def _point_counts_numba(B, W0, vmask, pdeg, combos, kmax, out):
    npts = W0.shape[0]
    W = np.empty(npts, dtype=np.int64)
    for c in range(combos.shape[0]):
        cm = combos[c]
        for p in range(npts):
            W[p] = W0[p]
        i = 0
        while cm:
            if cm & 1:
                for p in range(npts):
                    W[p] ^= B[i, p]
            cm >>= 1
            i += 1
        for p in range(npts):
            if (W[p] & vmask[p]) == 0:
                d = pdeg[p]
                for k in range(d, kmax + 1, d):
                    out[c, k - 1] += d


def _point_counts_numpy(B, W0, vmask, pdeg, combos, kmax):
    out = np.zeros((combos.shape[0], kmax), dtype=np.int64)
    for a in range(0, combos.shape[0], 4096):
        W = _words_numpy(B, W0, combos[a:a + 4096])
        on = (W & vmask) == 0
        for k in range(1, kmax + 1):
            w = np.where(k % pdeg == 0, pdeg, 0)
            out[a:a + 4096, k - 1] = on @ w
    return out


def point_counts(B, W0, vmask, pdeg, combos, kmax=6, backend=None):
    """N_1..N_kmax for each combination (closed points weighted by degree)."""
    B = np.ascontiguousarray(B, dtype=np.int64)
    combos = np.ascontiguousarray(combos, dtype=np.int64)
    use_nb = USE_NUMBA if backend is None else backend == "numba"
    if use_nb:
        out = np.zeros((combos.shape[0], kmax), dtype=np.int64)
        _point_counts_numba(B, np.asarray(W0, np.int64), np.asarray(vmask, np.int64),
                            np.asarray(pdeg, np.int64), combos, kmax, out)
        return out
    return _point_counts_numpy(B, np.asarray(W0, np.int64), np.asarray(vmask, np.int64),
                               np.asarray(pdeg, np.int64), combos, kmax)


# ------------------------------------------------------------ orbit minima


@njit
def _orbit_min_numba(tables, vecs, out_min, out_stab):
    ng, nch, width = tables.shape
    shift = 0
    while (1 << shift) < width:
        shift += 1
    mask = width - 1
    for v in range(vecs.shape[0]):
        x = vecs[v]
        best = x
        stab = 0
        for g in range(ng):
            y = 0
            for c in range(nch):
                y ^= tables[g, c, (x >> (c * shift)) & mask]
            if y < best:
                best = y
            if y == x:
                stab += 1
        out_min[v] = best
        out_stab[v] = stab


def _orbit_min_numpy(tables, vecs):
    ng, nch, width = tables.shape
    shift = width.bit_length() - 1
    mask = width - 1
    best = vecs.copy()
    stab = np.zeros_like(vecs)
    for g in range(ng):
        y = np.zeros_like(vecs)
        for c in range(nch):
            y ^= tables[g, c][(vecs >> (c * shift)) & mask]
        np.minimum(best, y, out=best)
        stab += (y == vecs)
    return best, stab


def orbit_minima(tables, vecs, backend=None):
    """Minimum image and stabilizer size of each vector under a group of
    linear maps given as chunked lookup tables (shape ng x nchunks x 2^chunk)."""
    tables = np.ascontiguousarray(tables, dtype=np.int64)
    vecs = np.ascontiguousarray(vecs, dtype=np.int64)
    use_nb = USE_NUMBA if backend is None else backend == "numba"
    if use_nb:
        mn = np.empty_like(vecs)
        st = np.empty_like(vecs)
        _orbit_min_numba(tables, vecs, mn, st)
        return mn, st
    return _orbit_min_numpy(tables, vecs)


# ------------------------------------------------------------ witnesses


def first_singular(B, W0, smask, combo: int):
    """Index of the first tabulated point where the curve is singular, or -1."""
    W = np.asarray(W0, dtype=np.int64).copy()
    i = 0
    while combo:
        if combo & 1:
            W ^= B[i]
        combo >>= 1
        i += 1
    hits = np.nonzero((W & smask) == 0)[0]
    return int(hits[0]) if hits.size else -1
