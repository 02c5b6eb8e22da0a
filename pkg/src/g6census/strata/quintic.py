"""Smooth plane quintics: full sweep of ternary quintic forms.

A smooth plane quintic has a unique g^2_5, so every automorphism of the
curve is a projectivity and Aut(C) is the stabilizer of the form in
GL_3(F_2) = PGL_3(F_2).
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..groupact import gl_elements, linear_tables, mat_order, substitution_matrix
from ..polyform import Form
from ..records import make_record
from ..smoothcert import plane_quintic_table
from .common import canonical_reps, index_range, stabilizer_fingerprints

BLOCKS, DEGREES = (3,), (5,)
DIM = 21


@lru_cache(maxsize=None)
def quintic_table():
    return plane_quintic_table()


@lru_cache(maxsize=None)
def group_tables():
    """Lookup tables of F -> F(Mx) for all 168 M, and element orders."""
    mats = gl_elements(3)
    tabs = np.stack([linear_tables(substitution_matrix(BLOCKS, DEGREES, (M,))) for M in mats])
    orders = np.array([mat_order(M) for M in mats])
    return tabs, orders


def model_string(coeffs: int) -> str:
    return "quintic:" + Form(BLOCKS, DEGREES, int(coeffs)).hex()


def smooth_forms(shard=None) -> np.ndarray:
    start, stop = index_range(1 << DIM, shard)
    return quintic_table().smooth_combos(start, stop)


def quintic_sweep(shard=None) -> list:
    """One record per isomorphism class whose canonical form lies in the shard."""
    smooth = smooth_forms(shard)
    tabs, orders = group_tables()
    reps, _ = canonical_reps(tabs, smooth)
    counts = quintic_table().counts(reps)
    auts = stabilizer_fingerprints(tabs, orders, reps)
    return [make_record("quintic", model_string(f), c, a, name)
            for f, c, (a, name) in zip(reps.tolist(), counts.tolist(), auts)]
