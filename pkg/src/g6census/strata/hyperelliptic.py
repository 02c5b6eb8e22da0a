"""Hyperelliptic curves y^2 + q(x) y = p(x) over F_2.

For genus g, q is a binary form of weight g+1 and p one of weight 2g+2
(polynomials are dehomogenized at Z = 1, bit i = coefficient of x^i).
A pair (A, R) with A in PGL_2(F_2) and deg R <= g+1 acts by

    T_{A,R}(q, p) = (psi(A) q, psi(A) p + R^2 + psi(A)(q) R),

and two models define isomorphic curves iff they are related by some
T_{A,R}.  Composition of the maps is T_{A,R} T_{B,S} = T_{BA, psi(A)S + R}.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ..binfield import make_field
from ..groupact import (apply_columns, fingerprint_from_orders, identity, matmul, pgl2,
                        psi_matrix)
from ..polyform import deg, gcd, pderiv, pmul, psquare, reverse
from ..gf2 import echelon, reduce, solve
from ..records import make_record
from .common import select_units


@dataclass(frozen=True)
class HypModel:
    q: int
    p: int
    g: int = 6

    @property
    def model(self) -> str:
        return f"hyp:{self.q:x}:{self.p:x}"

    @classmethod
    def parse(cls, s: str, g: int = 6) -> "HypModel":
        tag, q, p = s.split(":")
        if tag != "hyp":
            raise ValueError(s)
        return cls(int(q, 16), int(p, 16), g)


# ------------------------------------------------------------ group data


@lru_cache(maxsize=None)
def _psi_cols(g: int):
    """A -> (columns of psi_{g+1}(A), columns of psi_{2g+2}(A))."""
    return {A: (psi_matrix(A, g + 1), psi_matrix(A, 2 * g + 2)) for A in pgl2()}


def act(A, R: int, q: int, p: int, g: int):
    cq, cp = _psi_cols(g)[A]
    q1 = apply_columns(cq, q)
    return q1, apply_columns(cp, p) ^ psquare(R) ^ pmul(q1, R)


def compose(a, b, g: int):
    """(A, R) * (B, S) such that T_a T_b = T_{a*b}."""
    (A, R), (B, S) = a, b
    return matmul(B, A), apply_columns(_psi_cols(g)[A][0], S) ^ R


def pair_order(a, g: int) -> int:
    one = (identity(2), 0)
    n, x = 1, a
    while x != one:
        x = compose(x, a, g)
        n += 1
    return n


# ------------------------------------------------------------ smoothness


def _singular_at_finite(q: int, p: int) -> bool:
    dq, dp = pderiv(q), pderiv(p)
    h = pmul(psquare(dq), p) ^ psquare(dp)
    return deg(gcd(q, h)) > 0 if h else deg(q) > 0


def hx_is_smooth(m: HypModel) -> bool:
    g = m.g
    if m.q == 0:
        return False
    if not 2 * g + 1 <= max(2 * deg(m.q), deg(m.p)) <= 2 * g + 2:
        return False
    if _singular_at_finite(m.q, m.p):
        return False
    Q, P = reverse(m.q, g + 1), reverse(m.p, 2 * g + 2)
    if Q & 1:
        return True
    # t | Q; singular at t = 0 iff t divides Q'^2 P + P'^2
    h = pmul(psquare(pderiv(Q)), P) ^ psquare(pderiv(P))
    return bool(h & 1)


# ------------------------------------------------------------ shift space


def shift_space(q: int, g: int):
    """Echelon basis of {r^2 + q r : deg r <= g+1}."""
    return echelon([psquare(1 << i) ^ pmul(q, 1 << i) for i in range(g + 2)])


def normal_p(q: int, p: int, g: int) -> int:
    return reduce(p, shift_space(q, g))


# ------------------------------------------------------------ isomorphisms


def hx_isomorphic(m1: HypModel, m2: HypModel):
    """Witness (A, R) with T_{A,R}(m2) = m1, or None."""
    g = m1.g
    for A in pgl2():
        cq, cp = _psi_cols(g)[A]
        if apply_columns(cq, m2.q) != m1.q:
            continue
        target = m1.p ^ apply_columns(cp, m2.p)
        cols = [psquare(1 << i) ^ pmul(m1.q, 1 << i) for i in range(g + 2)]
        R = solve(cols, target)
        if R is not None:
            return A, R
    return None


def automorphisms(m: HypModel) -> list:
    """All pairs (A, R) with T_{A,R}(m) = m."""
    g = m.g
    out = []
    cols = [psquare(1 << i) ^ pmul(m.q, 1 << i) for i in range(g + 2)]
    for A in pgl2():
        cq, cp = _psi_cols(g)[A]
        if apply_columns(cq, m.q) != m.q:
            continue
        R = solve(cols, m.p ^ apply_columns(cp, m.p))
        if R is not None:
            out.extend([(A, R), (A, R ^ m.q)])
    return out


def hx_aut_order(m: HypModel) -> int:
    return len(automorphisms(m))


def aut_fingerprint(m: HypModel):
    fp = fingerprint_from_orders([pair_order(a, m.g) for a in automorphisms(m)])
    return fp.order, fp.name


# ------------------------------------------------------------ point counts


def hx_counts(m: HypModel, kmax: int = 6) -> tuple:
    g = m.g
    out = []
    Q, P = reverse(m.q, g + 1), reverse(m.p, 2 * g + 2)
    for k in range(1, kmax + 1):
        F = make_field(k)
        xs = np.arange(F.size, dtype=np.int64)
        qv = _eval_all(m.q, xs, F)
        pv = _eval_all(m.p, xs, F)
        n = int(np.count_nonzero(qv == 0))
        nz = qv != 0
        ratio = _div_all(pv[nz], _sqr_all(qv[nz], F), F)
        n += 2 * int(np.count_nonzero(_trace_table(k)[ratio] == 0))
        q0, p0 = Q & 1, P & 1
        if q0 == 0:
            n += 1
        elif F.trace(p0) == 0:
            n += 2
        out.append(n)
    return tuple(out)


@lru_cache(maxsize=None)
def _trace_table(k):
    F = make_field(k)
    return np.array([F.trace(x) for x in range(F.size)], dtype=np.int64)


def _eval_all(poly: int, xs, F):
    acc = np.zeros_like(xs)
    for i in range(deg(poly), -1, -1):
        acc = _mul_all(acc, xs, F)
        if poly >> i & 1:
            acc ^= 1
    return acc


def _mul_all(a, b, F):
    if F.size == 2:
        return a & b
    lg, ex = np.asarray(F.log), np.asarray(F.exp)
    out = ex[lg[a] + lg[b]]
    return np.where((a == 0) | (b == 0), 0, out)


def _sqr_all(a, F):
    return _mul_all(a, a, F)


def _div_all(a, b, F):
    if F.size == 2:
        return a
    lg, ex = np.asarray(F.log), np.asarray(F.exp)
    order = F.size - 1
    out = ex[(lg[a] - lg[b]) % order]
    return np.where(a == 0, 0, out)


# ------------------------------------------------------------ enumeration


@lru_cache(maxsize=None)
def q_orbit_reps(g: int):
    """[(q_min, [A in PGL_2 fixing q_min])] over nonzero q of degree <= g+1."""
    cols = _psi_cols(g)
    seen, reps = set(), []
    for q in range(1, 1 << (g + 2)):
        if q in seen:
            continue
        orbit = {apply_columns(c[0], q) for c in cols.values()}
        seen |= orbit
        qm = min(orbit)
        reps.append((qm, [A for A, c in cols.items() if apply_columns(c[0], qm) == qm]))
    return sorted(reps)


def _classes_for_q(q: int, stab, g: int):
    rows = shift_space(q, g)
    free = [b for b in range(2 * g + 3) if b not in rows]
    cp = [_psi_cols(g)[A][1] for A in stab]
    for bits in range(1 << len(free)):
        p = 0
        for j, b in enumerate(free):
            if bits >> j & 1:
                p |= 1 << b
        m = HypModel(q, p, g)
        if not hx_is_smooth(m):
            continue
        if all(reduce(apply_columns(c, p), rows) >= p for c in cp):
            yield m


def hx_enumerate(g: int = 6, shard=None) -> list[HypModel]:
    """One canonical model per isomorphism class (ordered by (q, p))."""
    out = []
    for q, stab in select_units(q_orbit_reps(g), shard):
        out.extend(_classes_for_q(q, stab, g))
    return out


def hx_records(shard=None) -> list:
    recs = []
    for m in hx_enumerate(6, shard):
        order, name = aut_fingerprint(m)
        recs.append(make_record("hyp", m.model, hx_counts(m), order, name))
    return recs


def weighted_mass(models) -> Fraction:
    return sum((Fraction(1, hx_aut_order(m)) for m in models), Fraction(0))


# ------------------------------------------------------------ naive oracle


def naive_census(g: int):
    """Orbits of all smooth models under the full (A, R) group, by
    union-find over generators.  Returns (number of classes, mass,
    {orbit minimum (q, p): orbit size})."""
    models = [(q, p) for q in range(1, 1 << (g + 2)) for p in range(1 << (2 * g + 3))
              if hx_is_smooth(HypModel(q, p, g))]
    index = {m: i for i, m in enumerate(models)}
    parent = list(range(len(models)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    gens = [(A, 0) for A in pgl2()] + [(identity(2), 1 << i) for i in range(g + 2)]
    for i, (q, p) in enumerate(models):
        for A, R in gens:
            j = index[act(A, R, q, p, g)]
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    sizes = defaultdict(int)
    for i in range(len(models)):
        sizes[find(i)] += 1
    group_order = len(pgl2()) << (g + 2)
    mass = Fraction(len(models), group_order)
    return len(sizes), mass, {models[r]: s for r, s in sizes.items()}
