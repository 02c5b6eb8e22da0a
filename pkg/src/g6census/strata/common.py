"""Helpers shared by the linear-sweep strata."""

from __future__ import annotations

import numpy as np

from .. import kernels
from ..groupact import apply_tables, fingerprint_from_orders


def parse_shard(shard) -> tuple[int, int]:
    """(i, n) with 0 <= i < n; accepts '2/5' (1-based) or a 0-based tuple."""
    if shard is None:
        return 0, 1
    if isinstance(shard, str):
        a, b = shard.split("/")
        i, n = int(a) - 1, int(b)
    else:
        i, n = shard
    if n < 1 or not 0 <= i < n:
        raise ValueError(f"shard {shard!r} out of range")
    return i, n


def index_range(total: int, shard) -> tuple[int, int]:
    i, n = parse_shard(shard)
    return total * i // n, total * (i + 1) // n


def select_units(units, shard):
    """Round-robin partition of a list of independent work units."""
    i, n = parse_shard(shard)
    return [u for j, u in enumerate(units) if j % n == i]


def canonical_reps(tables, vecs):
    """Vectors that are the minimum of their orbit, with stabilizer sizes."""
    vecs = np.asarray(vecs, dtype=np.int64)
    if vecs.size == 0:
        return vecs, vecs
    mn, st = kernels.orbit_minima(tables, vecs)
    keep = mn == vecs
    return vecs[keep], st[keep]


def stabilizer_fingerprints(tables, elem_orders, reps):
    """(aut order, fingerprint name) per rep; group elements given as tables."""
    reps = np.asarray(reps, dtype=np.int64)
    fixed = np.zeros((len(tables), reps.size), dtype=bool)
    for g, tab in enumerate(tables):
        fixed[g] = apply_tables(tab, reps) == reps
    out = []
    for j in range(reps.size):
        orders = [int(elem_orders[g]) for g in np.nonzero(fixed[:, j])[0]]
        fp = fingerprint_from_orders(orders)
        out.append((fp.order, fp.name))
    return out
