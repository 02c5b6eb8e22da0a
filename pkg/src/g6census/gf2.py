"""Linear algebra over F_2 with vectors stored as Python ints."""

from __future__ import annotations


def echelon(vecs) -> dict:
    """Fully reduced echelon basis {pivot bit: row} of span(vecs)."""
    rows: dict = {}
    for v in vecs:
        v = reduce(v, rows)
        if v:
            b = v.bit_length() - 1
            for k in list(rows):
                if rows[k] >> b & 1:
                    rows[k] ^= v
            rows[b] = v
    return rows


def reduce(v: int, rows) -> int:
    for b, r in rows.items():
        if v >> b & 1:
            v ^= r
    return v


def solve(cols, target: int):
    """x with XOR_{i in x} cols[i] = target, or None."""
    rows: dict = {}
    for i, c in enumerate(cols):
        v, tag = c, 1 << i
        for b, (r, t) in rows.items():
            if v >> b & 1:
                v, tag = v ^ r, tag ^ t
        if v:
            b = v.bit_length() - 1
            for k in list(rows):
                if rows[k][0] >> b & 1:
                    rows[k] = (rows[k][0] ^ v, rows[k][1] ^ tag)
            rows[b] = (v, tag)
    x = 0
    for b, (r, t) in rows.items():
        if target >> b & 1:
            target ^= r
            x ^= t
    return x if target == 0 else None


def kernel(cols) -> list[int]:
    """Basis of {x : XOR_{i in x} cols[i] = 0}."""
    rows: dict = {}
    out = []
    for i, c in enumerate(cols):
        v, tag = c, 1 << i
        for b, (r, t) in rows.items():
            if v >> b & 1:
                v, tag = v ^ r, tag ^ t
        if v:
            b = v.bit_length() - 1
            for k in list(rows):
                if rows[k][0] >> b & 1:
                    rows[k] = (rows[k][0] ^ v, rows[k][1] ^ tag)
            rows[b] = (v, tag)
        else:
            out.append(tag)
    return out


def rank(vecs) -> int:
    return len(echelon(vecs))


def combine(basis, combo: int, offset: int = 0) -> int:
    v, i = offset, 0
    while combo:
        if combo & 1:
            v ^= basis[i]
        combo >>= 1
        i += 1
    return v
