"""Trigonal curves of genus 6 with Maroni invariant 0 and 2.

Maroni 0: smooth (3,4)-forms on P^1 x P^1 up to PGL_2(F_2)^2.
Maroni 2: smooth (1,3)-forms G on the surface X_1 : F = 0 in P^1 x P^2,
F = (x0^2 + x1^2) y1 + x0 x1 y2, up to the stabilizer of X_1.

A reducible (3,4)-form whose two parts meet only in closed points of
degree >= 7 escapes the degree-6 singular-point search (the delta bound
holds for integral curves only).  On P^1 x P^1 the split types with
intersection number >= 7 are (0,3)+(3,1), (0,4)+(3,0), (1,3)+(2,1) and
(1,4)+(2,0); all such products are listed and excluded.  No other split is
possible over F_2: a conjugate set of k components would need k | 3 and
k | 4.  On X_1 every split meets in a point of degree <= 6.

Both are enumerated by the zero pattern on the nine rational points of the
surface: for each orbit representative T of subsets, the forms vanishing
exactly on T form an affine subspace, swept by Gray code; a form is kept
when it is the minimum of its orbit under Stab(T).  The trigonal pencil of
a curve of genus >= 5 is unique, hence Aut(C) is the stabilizer of the form
in the ambient group.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .. import kernels
from ..binfield import make_field
from ..gf2 import combine, kernel, solve
from ..groupact import (apply_columns, gl_elements, inverse, linear_tables, matvec,
                        product_group, substitution_matrix)
from ..orbitree import build_tree
from ..polyform import Form, form_basis, form_dim, form_mul, monomial_index
from ..records import make_record
from ..smoothcert import (PointTable, closed_point_reps, complete_intersection_functionals,
                          hypersurface_functionals, pack_table, product_closed_points,
                          projective_space_points)
from .common import select_units, stabilizer_fingerprints

X1_FORM = Form.from_terms((2, 3), (2, 1), [((2, 0), (0, 1, 0)), ((0, 2), (0, 1, 0)),
                                             ((1, 1), (0, 0, 1))])


@dataclass
class SubsetAmbient:
    """Everything the subset pipeline needs for one surface."""
    tag: str
    blocks: tuple
    degrees: tuple
    table: PointTable
    group: list              # (perm, form columns) per element
    tables: np.ndarray       # form-action lookup tables per element
    orders: np.ndarray       # element orders
    rational: list           # indices (into table.points) of the rational points
    perms: np.ndarray        # action of each element on the rational points

    @property
    def dim(self) -> int:
        return form_dim(self.blocks, self.degrees)


def _point_mask(block) -> int:
    return sum(int(c) << i for i, c in enumerate(block))


def _rational_keys(table):
    rational = [i for i, (d, _) in enumerate(table.points) if d == 1]
    keys = [tuple(_point_mask(b) for b in table.points[i][1]) for i in rational]
    return rational, keys


def _make_ambient(tag, blocks, degrees, table, elements) -> SubsetAmbient:
    """elements: list of (perm of the rational points, columns of the
    induced map on forms), both for the same automorphism."""
    rational, _ = _rational_keys(table)
    perms = np.array([p for p, _ in elements], dtype=np.int16)
    tables = np.stack([linear_tables(cols) for _, cols in elements])
    orders = np.array([_pair_order(e, elements[0]) for e in elements])
    return SubsetAmbient(tag, blocks, degrees, table, elements, tables, orders, rational, perms)


def _pair_mul(a, b):
    return tuple(np.asarray(a[0])[np.asarray(b[0])].tolist()), \
        tuple(apply_columns(a[1], c) for c in b[1])


def _pair_order(e, one) -> int:
    n, x = 1, e
    key = lambda z: (tuple(z[0]), tuple(z[1]))
    while key(x) != key(one):
        x = _pair_mul(x, e)
        n += 1
    return n


def _matrix_elements(blocks, degrees, table, mats):
    """(perm, pushforward columns) for product-type automorphisms g:
    points P -> gP, forms G -> G o g^{-1}."""
    _, keys = _rational_keys(table)
    pos = {k: n for n, k in enumerate(keys)}
    out = []
    for g in mats:
        perm = tuple(pos[tuple(matvec(M, v) for M, v in zip(g, k))] for k in keys)
        inv = tuple(inverse(M) for M in g)
        out.append((perm, tuple(substitution_matrix(blocks, degrees, inv))))
    return out


def closure(gens):
    """All products of the generators (pairs of perm and columns)."""
    gens = [(tuple(p), tuple(c)) for p, c in gens]
    seen = {g: None for g in gens}
    frontier = list(gens)
    while frontier:
        nxt = []
        for a in frontier:
            for b in gens:
                c = _pair_mul(a, b)
                if c not in seen:
                    seen[c] = None
                    nxt.append(c)
        frontier = nxt
    return list(seen)


# ------------------------------------------------------------ Maroni 0


@lru_cache(maxsize=None)
def t0_ambient() -> SubsetAmbient:
    blocks, degrees = (2, 2), (3, 4)
    pts = product_closed_points(blocks)
    table = pack_table(pts, hypersurface_functionals(blocks, degrees), form_dim(blocks, degrees))
    g2 = gl_elements(2)
    elems = _matrix_elements(blocks, degrees, table, product_group(g2, g2))
    return _make_ambient("t0", blocks, degrees, table, elems)


T0_BAD_SPLITS = ((0, 3), (0, 4), (1, 3), (1, 4))


@lru_cache(maxsize=None)
def t0_split_products() -> frozenset:
    """Coefficient vectors of G*H with bideg G in T0_BAD_SPLITS."""
    blocks = (2, 2)
    out = set()
    for a, b in T0_BAD_SPLITS:
        da, db = form_dim(blocks, (a, b)), form_dim(blocks, (3 - a, 4 - b))
        hs = [Form(blocks, (3 - a, 4 - b), h) for h in range(1, 1 << db)]
        for gc in range(1, 1 << da):
            G = Form(blocks, (a, b), gc)
            out.update(form_mul(G, H).coeffs for H in hs)
    return frozenset(out)


# ------------------------------------------------------------ Maroni 2


def x1_points(d: int):
    """Normalized points of X_1 over F_{2^d}: the fibre over x is the line
    (x0^2 + x1^2) y1 + x0 x1 y2 = 0, spanned by (1,0,0) and (0, b, a)."""
    F = make_field(d)
    out = []
    for x in projective_space_points(2, F):
        a = F.mul(x[0] ^ x[1], x[0] ^ x[1])
        b = F.mul(x[0], x[1])
        for s, t in projective_space_points(2, F):
            y = (s, F.mul(t, b), F.mul(t, a))
            inv = F.inv(next(c for c in y if c))
            out.append((x, tuple(F.mul(c, inv) for c in y)))
    return out


def x1_closed_points(max_deg=6):
    pts = []
    for d in range(1, max_deg + 1):
        pts.extend(closed_point_reps(x1_points(d), d))
    return pts


@lru_cache(maxsize=None)
def x1_stabilizer() -> list:
    """Full stabilizer of the X_1 form in PGL_2(F_2) x PGL_3(F_2)."""
    blocks, degrees = X1_FORM.blocks, X1_FORM.degrees
    out = []
    for g in product_group(gl_elements(2), gl_elements(3)):
        cols = substitution_matrix(blocks, degrees, g)
        if combine(cols, X1_FORM.coeffs) == X1_FORM.coeffs:
            out.append(g)
    return out


def x1_involutions() -> list:
    """x0 <-> x1; y0 -> y0 + y1; y0 -> y0 + y2 (as substitutions)."""
    I2, I3 = (1, 2), (1, 2, 4)
    return [((2, 1), I3), (I2, (3, 2, 4)), (I2, (5, 2, 4))]


# X_1 is the Hirzebruch surface F_2; over F_2 its automorphism group is
# H^0(P^1, O(2)) x| PGL_2, of order 48.  With a = (x0 + x1)^2 and b = x0 x1
# the fibre over x is spanned by (1,0,0) and (0,b,a).  The automorphism
# phi_{A,c} sends s (1,0,0) + t (0,b(x),a(x)) over x to
# (s + c(x) t) (1,0,0) + t (0,b(Ax),a(Ax)) over Ax; scaled by b(x) this is
#     y'' = (b(x) y0 + c(x) y1, b(Ax) y1, a(Ax) y1)
# (or the same with a(x), y2 where b(x) = 0).  Only 8 of the 48 are linear on
# P^1 x P^2.  The action on (1,3)-forms G is found by solving
#     G(Ax, y'') = b(x)^3 G'(x, y) + F H,   bideg H = (5, 2).

_VARS = 5  # x0, x1, y0, y1, y2


def _sp_mul(a: frozenset, b: frozenset) -> frozenset:
    out: set = set()
    for u in a:
        for v in b:
            out ^= {tuple(i + j for i, j in zip(u, v))}
    return frozenset(out)


def _sp_pow(a, e):
    r = frozenset({(0,) * _VARS})
    for _ in range(e):
        r = _sp_mul(r, a)
    return r


def _sp_from_form(f: Form) -> frozenset:
    return frozenset(tuple(t[0]) + tuple(t[1]) for t in f.terms())


def _sp_to_vec(a, blocks, degrees) -> int:
    index = monomial_index(blocks, degrees)
    v = 0
    for m in a:
        v ^= 1 << index[(m[:2], m[2:])]
    return v


def _var(i):
    e = [0] * _VARS
    e[i] = 1
    return frozenset({tuple(e)})


def _quad(c, x0, x1) -> frozenset:
    """c = coefficients of (x0^2, x0 x1, x1^2)."""
    out = frozenset()
    for coef, m in zip(c, (_sp_mul(x0, x0), _sp_mul(x0, x1), _sp_mul(x1, x1))):
        if coef:
            out = out ^ m
    return out


def _linear(row, x0, x1):
    out = frozenset()
    if row & 1:
        out = out ^ x0
    if row >> 1 & 1:
        out = out ^ x1
    return out


@lru_cache(maxsize=None)
def _solve_columns():
    blocks = (2, 3)
    F = _sp_from_form(X1_FORM)
    x0, x1 = _var(0), _var(1)
    b3 = _sp_pow(_sp_mul(x0, x1), 3)
    big = (7, 3)
    cols = [_sp_to_vec(_sp_mul(b3, _sp_from_form(Form(blocks, (1, 3), 1 << i))), blocks, big)
            for i in range(form_dim(blocks, (1, 3)))]
    cols += [_sp_to_vec(_sp_mul(F, _sp_from_form(Form(blocks, (5, 2), 1 << i))), blocks, big)
             for i in range(form_dim(blocks, (5, 2)))]
    return cols


def hirzebruch_pullback(A, c) -> list[int]:
    """Columns of G -> G o phi_{A,c} on (1,3)-forms."""
    blocks = (2, 3)
    x0, x1, y0, y1, y2 = (_var(i) for i in range(_VARS))
    ax0, ax1 = _linear(A[0], x0, x1), _linear(A[1], x0, x1)
    b = _sp_mul(x0, x1)
    bA = _sp_mul(ax0, ax1)
    aA = _sp_mul(ax0 ^ ax1, ax0 ^ ax1)
    ys = (_sp_mul(b, y0) ^ _sp_mul(_quad(c, x0, x1), y1), _sp_mul(bA, y1), _sp_mul(aA, y1))
    cols = _solve_columns()
    n = form_dim(blocks, (1, 3))
    out = []
    for (e0, e1), fs in form_basis(blocks, (1, 3)):
        img = _sp_mul(_sp_pow(ax0, e0), _sp_pow(ax1, e1))
        for yi, f in zip(ys, fs):
            img = _sp_mul(img, _sp_pow(yi, f))
        sol = solve(cols, _sp_to_vec(img, blocks, (7, 3)))
        if sol is None:
            raise RuntimeError("map does not preserve the (1,3) system")
        out.append(sol & ((1 << n) - 1))
    return out


def hirzebruch_point(A, c, P):
    """phi_{A,c} on a point ((x0, x1), (y0, y1, y2)) of X_1 over F_2."""
    (x0, x1), (y0, y1, y2) = P
    ax = matvec(A, x0 | x1 << 1)
    u0, u1 = ax & 1, ax >> 1 & 1
    a, b = x0 ^ x1, x0 & x1
    aA, bA = u0 ^ u1, u0 & u1
    cv = (c[0] & x0) ^ (c[1] & x0 & x1) ^ (c[2] & x1)
    img = (b & y0 ^ cv & y1, bA & y1, aA & y1)
    if not any(img):
        img = (a & y0 ^ cv & y2, bA & y2, aA & y2)
    return (u0, u1), img


def _hirzebruch_elements(table):
    _, keys = _rational_keys(table)
    pos = {k: n for n, k in enumerate(keys)}
    pts = [((k[0] & 1, k[0] >> 1 & 1), (k[1] & 1, k[1] >> 1 & 1, k[1] >> 2 & 1)) for k in keys]
    out = []
    for A in gl_elements(2):
        for ci in range(8):
            c = (ci & 1, ci >> 1 & 1, ci >> 2 & 1)
            perm = []
            for P in pts:
                x, y = hirzebruch_point(A, c, P)
                perm.append(pos[(_point_mask(x), _point_mask(y))])
            pull = hirzebruch_pullback(A, c)
            push = [solve(pull, 1 << i) for i in range(len(pull))]
            out.append((tuple(perm), tuple(push)))
    return out


@lru_cache(maxsize=None)
def t2_ambient() -> SubsetAmbient:
    blocks, degrees = (2, 3), (1, 3)
    fn = complete_intersection_functionals(X1_FORM, blocks, degrees)
    table = pack_table(x1_closed_points(), fn, form_dim(blocks, degrees))
    elems = _hirzebruch_elements(table)
    if len(set(elems)) != 48 or set(closure(elems)) != set(elems):
        raise RuntimeError("automorphisms of X_1 do not form a group of order 48")
    return _make_ambient("t2", blocks, degrees, table, elems)


# ------------------------------------------------------------ subset pipeline


@lru_cache(maxsize=None)
def subset_tree(tag: str):
    amb = AMBIENTS[tag]()
    uniq, inverse = np.unique(amb.perms, axis=0, return_inverse=True)
    tree = build_tree(uniq, len(amb.rational))
    return tree, uniq, np.asarray(inverse).ravel()


def _stab_elements(amb, tree_data, k, j):
    tree, uniq, inverse = tree_data
    rows = tree.levels[k].stabs[j]
    keys = {r.tobytes() for r in rows}
    return [g for g in range(len(amb.group)) if uniq[inverse[g]].tobytes() in keys]


def subset_units(tag: str):
    tree, _, _ = subset_tree(tag)
    return [(k, j) for k, L in enumerate(tree.levels) for j in range(len(L.reps))]


def _evaluation_columns(amb):
    """Column i: values of monomial i at the rational points (bit n = point n)."""
    cols = []
    for i in range(amb.dim):
        v = 0
        for n, p in enumerate(amb.rational):
            v |= int(amb.table.B[i, p] & 1) << n
        cols.append(v)
    return cols


def unit_classes(tag: str, k: int, j: int):
    """Canonical smooth forms (coefficient ints) vanishing exactly on the
    representative subset (k, j), with counts and automorphism data."""
    amb = AMBIENTS[tag]()
    tree_data = subset_tree(tag)
    T = tree_data[0].levels[k].reps[j]
    cols = _evaluation_columns(amb)
    full = (1 << len(amb.rational)) - 1
    rhs = full & ~sum(1 << t for t in T)
    offset = solve(cols, rhs)
    if offset is None:
        return []
    basis = kernel(cols)
    sub = amb.table.restrict(basis, offset)
    combos = sub.smooth_combos()
    if combos.size == 0:
        return []
    vecs = np.array([combine(basis, int(c), offset) for c in combos], dtype=np.int64)
    if tag == "t0":
        bad = t0_split_products()
        ok = np.array([int(v) not in bad for v in vecs], dtype=bool)
        vecs, combos = vecs[ok], combos[ok]
        if vecs.size == 0:
            return []
    elems = _stab_elements(amb, tree_data, k, j)
    tabs = amb.tables[elems]
    mn, _ = kernels.orbit_minima(tabs, vecs)
    keep = mn == vecs
    reps, rcombos = vecs[keep], combos[keep]
    counts = sub.counts(rcombos)
    auts = stabilizer_fingerprints(tabs, amb.orders[elems], reps)
    return list(zip(reps.tolist(), counts.tolist(), auts))


def model_string(tag: str, coeffs: int) -> str:
    amb = AMBIENTS[tag]()
    return f"{tag}:" + Form(amb.blocks, amb.degrees, coeffs).hex()


def subset_records(tag: str, shard=None) -> list:
    recs = []
    for k, j in select_units(subset_units(tag), shard):
        for f, c, (a, name) in unit_classes(tag, k, j):
            recs.append(make_record(tag, model_string(tag, f), c, a, name))
    return recs


def t0_enumerate(shard=None) -> list:
    return subset_records("t0", shard)


def t2_enumerate(shard=None) -> list:
    return subset_records("t2", shard)


AMBIENTS = {"t0": t0_ambient, "t2": t2_ambient}
