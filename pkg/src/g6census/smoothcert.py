"""Smoothness certificates by finite point search.

A curve of arithmetic genus 6 cut out by an ample class is connected, and a
singular closed point of degree d has delta-invariant at least d, while the
total delta-invariant is at most 6.  So a singular curve always has a
singular closed point of degree <= 6, and searching the points over
F_{2^k}, k = 1..6, decides smoothness exactly.  Reducible or non-reduced
candidates are singular at a component intersection or along a multiple
component and are caught by the same search.

Tables built here feed the linear kernels in :mod:`g6census.kernels`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .binfield import make_field
from .polyform import (Form, fdivmod, fgcd, form_dim, monomial_partials,
                       monomial_values, resultant)

MAX_POINT_DEGREE = 6


@dataclass
class SingularityReport:
    smooth: bool
    witness: tuple | None = None  # (field degree, point)

    def __post_init__(self):
        if self.smooth == (self.witness is not None):
            raise ValueError("witness must be present iff the curve is singular")


@dataclass
class PointTable:
    """Packed functional values at closed points (see kernels module)."""
    n: int
    B: np.ndarray
    vmask: np.ndarray
    smask: np.ndarray
    pdeg: np.ndarray
    points: list = field(repr=False)
    W0: np.ndarray = None

    def __post_init__(self):
        if self.W0 is None:
            self.W0 = np.zeros(len(self.points), dtype=np.int64)

    def words(self, combo: int) -> np.ndarray:
        W = self.W0.copy()
        i = 0
        while combo:
            if combo & 1:
                W ^= self.B[i]
            combo >>= 1
            i += 1
        return W

    def restrict(self, basis: list[int], offset: int = 0) -> "PointTable":
        """Table for the affine family offset + span(basis) (coefficient ints)."""
        B = np.zeros((len(basis), len(self.points)), dtype=np.int64)
        for r, v in enumerate(basis):
            B[r] = self.words(v) ^ self.W0
        return PointTable(len(basis), B, self.vmask, self.smask, self.pdeg,
                          self.points, self.words(offset))

    def counts(self, combos, kmax: int = 6) -> np.ndarray:
        return kernels.point_counts(self.B, self.W0, self.vmask, self.pdeg,
                                    np.asarray(combos, dtype=np.int64), kmax)

    def smooth_combos(self, start=0, stop=None) -> np.ndarray:
        return kernels.smooth_combinations(self.B, self.W0, self.smask, start, stop)

    def certify(self, combo: int) -> SingularityReport:
        W = self.words(combo)
        if not np.any(W):
            raise ValueError("candidate vanishes on the whole ambient surface")
        hit = np.nonzero((W & self.smask) == 0)[0]
        if hit.size == 0:
            return SingularityReport(True)
        return SingularityReport(False, self.points[int(hit[0])])


def pack_table(points, functionals, n: int) -> PointTable:
    """points: list of (degree, point); functionals(point, F) -> list of
    length-n lists of field values.  The first functional is the value."""
    npts = len(points)
    B = np.zeros((n, npts), dtype=np.int64)
    vmask = np.zeros(npts, dtype=np.int64)
    smask = np.zeros(npts, dtype=np.int64)
    pdeg = np.zeros(npts, dtype=np.int64)
    for p, (d, P) in enumerate(points):
        F = make_field(d)
        funcs = functionals(P, F)
        if len(funcs) * d > 63:
            raise ValueError("too many functionals to pack")
        for j, vals in enumerate(funcs):
            for i, v in enumerate(vals):
                B[i, p] |= v << (j * d)
        vmask[p] = (1 << d) - 1
        smask[p] = (1 << (len(funcs) * d)) - 1
        pdeg[p] = d
    return PointTable(n, B, vmask, smask, pdeg, list(points))


# ------------------------------------------------------------ closed points


def _frob_point(P, F):
    return tuple(tuple(F.mul(c, c) for c in blk) for blk in P)


def _normalize_block(blk, F):
    for c in blk:
        if c:
            inv = F.inv(c)
            return tuple(F.mul(x, inv) for x in blk)
    raise ValueError("zero block")


def closed_point_reps(geometric_points, d: int):
    """Frobenius-orbit representatives (orbit minimum) of exact degree d
    among normalized points over F_{2^d}."""
    F = make_field(d)
    pts = set(geometric_points)
    out = []
    for P in sorted(pts):
        orbit = [P]
        Q = _frob_point(P, F)
        while Q != P:
            orbit.append(Q)
            Q = _frob_point(Q, F)
        if len(orbit) == d and P == min(orbit):
            out.append((d, P))
    return out


def projective_space_points(n: int, F):
    """Normalized points of P^{n-1}(F) (first nonzero coordinate 1)."""
    q = F.size
    for lead in range(n):
        for tail in itertools.product(range(q), repeat=n - lead - 1):
            yield (0,) * lead + (1,) + tail


def product_closed_points(blocks, max_deg=MAX_POINT_DEGREE, on_surface=None):
    """Closed points of prod P^{n_i - 1}, degree <= max_deg, optionally
    restricted by a predicate on_surface(point, F)."""
    out = []
    for d in range(1, max_deg + 1):
        F = make_field(d)
        geo = []
        for P in itertools.product(*[list(projective_space_points(n, F)) for n in blocks]):
            if on_surface is None or on_surface(P, F):
                geo.append(P)
        out.extend(closed_point_reps(geo, d))
    return out


# ------------------------------------------------------------ ambients


def hypersurface_functionals(blocks, degrees):
    """Value plus every partial derivative (blocks of a product of P^n)."""
    blocks, degrees = tuple(blocks), tuple(degrees)

    def fn(P, F):
        return [monomial_values(blocks, degrees, P, F)] + monomial_partials(blocks, degrees, P, F)
    return fn


def plane_quintic_table(max_deg=MAX_POINT_DEGREE) -> PointTable:
    pts = product_closed_points((3,), max_deg)
    return pack_table(pts, hypersurface_functionals((3,), (5,)), form_dim((3,), (5,)))


def p1p1_table(degrees=(3, 4), max_deg=MAX_POINT_DEGREE) -> PointTable:
    pts = product_closed_points((2, 2), max_deg)
    return pack_table(pts, hypersurface_functionals((2, 2), degrees),
                      form_dim((2, 2), degrees))


def complete_intersection_functionals(fixed: Form, blocks, degrees):
    """Curve = {fixed = 0} n {G = 0} with the surface {fixed = 0} smooth.

    At a point, singular iff G = 0 and dG is parallel to d(fixed); with a
    nonzero coordinate j0 of d(fixed) that is the vanishing of the minors
    d(fixed)_j0 dG_j - d(fixed)_j dG_j0, linear in G.
    """
    blocks, degrees = tuple(blocks), tuple(degrees)

    def fn(P, F):
        dfix = [_dot(fixed.coeffs, row, F)
                for row in monomial_partials(fixed.blocks, fixed.degrees, P, F)]
        j0 = next((j for j, v in enumerate(dfix) if v), None)
        if j0 is None:
            raise ValueError("fixed surface singular at a tabulated point")
        dG = monomial_partials(blocks, degrees, P, F)
        funcs = [monomial_values(blocks, degrees, P, F)]
        for j in range(len(dfix)):
            if j == j0:
                continue
            funcs.append([F.mul(dfix[j0], a) ^ F.mul(dfix[j], b)
                          for a, b in zip(dG[j], dG[j0])])
        return funcs
    return fn


def _dot(coeffs: int, vals, F) -> int:
    r = 0
    for i, v in enumerate(vals):
        if coeffs >> i & 1:
            r ^= v
    return r


def form_value(f: Form, P, F) -> int:
    return _dot(f.coeffs, monomial_values(f.blocks, f.degrees, P, F), F)


def certify_smooth(table: PointTable, combo: int) -> SingularityReport:
    return table.certify(combo)


# ------------------------------------------------------------ prefilter


def plane_prefilter(f: Form, max_deg: int = 2) -> bool:
    """False only when elimination exhibits a singular point of the plane
    curve f = 0.

    In each standard chart the partial-derivative system is eliminated
    along fibres of a coordinate projection: for x0 over F_{2^d}, d <=
    max_deg, a common root of f(x0, y), f_x(x0, y), f_y(x0, y) exists iff
    their gcd over F_{2^d}[y] is nonconstant (the resultant of the two
    partials is tested first)."""
    if f.blocks != (3,):
        raise ValueError("plane_prefilter expects a ternary form")
    if f.coeffs == 0:
        return False
    deg5 = f.degrees[0]
    terms = f.terms()
    for chart in range(3):
        others = [v for v in range(3) if v != chart]
        for d in range(1, max_deg + 1):
            F = make_field(d)
            for x0 in range(F.size):
                polys = _chart_fibre(terms, chart, others, x0, deg5, F)
                if resultant(polys[1], polys[2], F) != 0:
                    continue
                g = fgcd(fgcd(polys[0], polys[1], F), polys[2], F)
                if len(g) > 1:
                    return False
    return True


def _chart_fibre(terms, chart, others, x0, degree, F):
    """Coefficient lists in y of f, df/dx, df/dy on the chart
    (x_chart = 1, x_others[0] = x0, x_others[1] = y)."""
    a, b = others
    size = degree + 1
    f = [0] * size
    fx = [0] * size
    fy = [0] * size
    for (exps,) in terms:
        ea, eb = exps[a], exps[b]
        xa = F.pow(x0, ea) if ea else 1
        f[eb] ^= xa
        if ea & 1:
            fx[eb] ^= F.pow(x0, ea - 1) if ea > 1 else 1
        if eb & 1:
            fy[eb - 1] ^= xa
    return [_trim(f), _trim(fx), _trim(fy)]


def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


__all__ = ["SingularityReport", "PointTable", "certify_smooth", "plane_prefilter",
           "plane_quintic_table", "p1p1_table", "product_closed_points",
           "closed_point_reps", "pack_table", "fdivmod"]
