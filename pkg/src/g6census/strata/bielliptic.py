"""Bielliptic curves of genus 6 over F_2 as Artin-Schreier covers z^2 + z = f
of the five elliptic curves over F_2.

At a pole P of f whose order cannot be lowered by f -> f + h^2 + h locally,
the reduced order m_P is odd and the different exponent is m_P + 1.
Riemann-Hurwitz gives 10 = sum deg(P) (m_P + 1), so the covers of genus 6
are indexed by effective divisors D = sum n_P P of degree 5 with
m_P = 2 n_P - 1 at every P in supp D.  Each such cover has a representative
f in L(2D) (Mittag-Leffler: H^1(E, O(D)) = 0 since deg D > 0) and two
representatives differ by h^2 + h with h in L(D).  So the covers with
ramification divisor 2D are the classes of L(2D) / (h^2 + h : h in L(D)),
a 6-dimensional space, whose reduced pole orders are exactly 2 n_P - 1.

A genus-6 curve has at most one bielliptic involution, so isomorphisms
descend to automorphisms of E as a curve: E(F_2) x| Aut(E, O).
Functions are represented by their values at all points of E(F_{2^k}),
k = 1..6 (injective on L(2D), which has at most 10 zeros).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from ..binfield import make_field
from ..gf2 import echelon, kernel, reduce, solve
from ..groupact import fingerprint_from_orders
from ..records import make_record
from .common import select_units

KMAX = 6

# (a1, a2, a3, a4, a6), one per F_2-isomorphism class
BASES = (
    (1, 0, 0, 0, 1),   # y^2 + xy = x^3 + 1
    (1, 1, 0, 0, 1),   # y^2 + xy = x^3 + x^2 + 1
    (0, 0, 1, 0, 0),   # y^2 + y = x^3
    (0, 0, 1, 1, 0),   # y^2 + y = x^3 + x
    (0, 0, 1, 1, 1),   # y^2 + y = x^3 + x + 1
)

O = "O"


# ------------------------------------------------------------ series


def s_mul(a, b, n, F):
    out = [0] * n
    for i, x in enumerate(a[:n]):
        if x:
            for j in range(min(len(b), n - i)):
                if b[j]:
                    out[i + j] ^= F.mul(x, b[j])
    return out


def s_inv(a, n, F):
    """Inverse of a power series with a[0] != 0."""
    inv0 = F.inv(a[0])
    out = [0] * n
    out[0] = inv0
    for k in range(1, n):
        acc = 0
        for j in range(1, min(k, len(a) - 1) + 1):
            if a[j] and out[k - j]:
                acc ^= F.mul(a[j], out[k - j])
        out[k] = F.mul(acc, inv0)
    return out


def s_val(a):
    for i, x in enumerate(a):
        if x:
            return i
    return None


# ------------------------------------------------------------ the curve


@dataclass(frozen=True)
class Elliptic:
    index: int
    a: tuple

    def rhs_coeffs(self, x, F):
        a1, a2, a3, a4, a6 = self.a
        return (a1 * x) ^ a3, F.mul(F.mul(x, x), x) ^ (a2 * F.mul(x, x)) ^ (a4 * x) ^ a6

    def on_curve(self, x, y, F) -> bool:
        b, c = self.rhs_coeffs(x, F)
        return F.mul(y, y) ^ F.mul(b, y) ^ c == 0

    @lru_cache(maxsize=None)
    def points(self, k: int) -> tuple:
        """O followed by the affine points over F_{2^k}, sorted."""
        F = make_field(k)
        pts = [O]
        for x in range(F.size):
            for y in range(F.size):
                if self.on_curve(x, y, F):
                    pts.append((x, y))
        return tuple(pts)

    def order(self) -> int:
        return len(self.points(1))

    # group law
    def neg(self, P, F):
        if P == O:
            return O
        a1, _, a3, _, _ = self.a
        x, y = P
        return (x, y ^ (a1 * x) ^ a3)

    def add(self, P, Q, F):
        if P == O:
            return Q
        if Q == O:
            return P
        a1, a2, a3, a4, a6 = self.a
        (x1, y1), (x2, y2) = P, Q
        if x1 == x2:
            if y1 ^ y2 ^ (a1 * x2) ^ a3 == 0:
                return O
            den = (a1 * x1) ^ a3
            lam = F.div(F.mul(x1, x1) ^ a4 ^ (a1 * y1), den)
        else:
            lam = F.div(y1 ^ y2, x1 ^ x2)
        x3 = F.mul(lam, lam) ^ (a1 * lam) ^ a2 ^ x1 ^ x2
        y3 = F.mul(lam ^ a1, x3) ^ F.mul(lam, x1) ^ y1 ^ a3
        return (x3, y3)

    # local expansions
    @lru_cache(maxsize=None)
    def local_xy(self, P, d, n):
        """Series (x(t), y(t)) at an affine point P over F_{2^d}, n terms."""
        F = make_field(d)
        a1, a2, a3, a4, a6 = self.a
        x0, y0 = P
        ey = (a1 * x0) ^ a3
        if ey:
            x = [x0, 1] + [0] * (n - 2)
            y = [y0] + [0] * (n - 1)
            for k in range(1, n):
                e = self._eq_series(x, y, k + 1, F)
                y[k] = F.div(e[k], ey)
            return x[:n], y
        ex = (a1 * y0) ^ F.mul(x0, x0) ^ a4
        y = [y0, 1] + [0] * (n - 2)
        x = [x0] + [0] * (n - 1)
        for k in range(1, n):
            e = self._eq_series(x, y, k + 1, F)
            x[k] = F.div(e[k], ex)
        return x, y[:n]

    def _eq_series(self, x, y, n, F):
        a1, a2, a3, a4, a6 = self.a
        xx = s_mul(x, x, n, F)
        out = s_mul(y, y, n, F)
        xy = s_mul(x, y, n, F)
        xxx = s_mul(xx, x, n, F)
        for i in range(n):
            v = out[i] ^ (a1 * xy[i]) ^ (a3 * y[i]) ^ xxx[i] ^ (a2 * xx[i]) ^ (a4 * x[i])
            out[i] = v
        out[0] ^= a6
        return out

    @lru_cache(maxsize=None)
    def local_at_O(self, n):
        """(t^2 x, t^3 y) as power series in t = x/y over F_2, n terms."""
        F = make_field(1)
        a1, a2, a3, a4, a6 = self.a
        # w = 1/y = t^3 (1 + ...); iterate w = t^3 + a1 t w + a2 t^2 w + a3 w^2 + a4 t w^2 + a6 w^3
        m = n + 3
        w = [0] * m
        for _ in range(m):
            ww = s_mul(w, w, m, F)
            www = s_mul(ww, w, m, F)
            new = [0] * m
            new[3] = 1
            for i in range(m):
                if i >= 1:
                    new[i] ^= a1 * w[i - 1] ^ a4 * ww[i - 1]
                if i >= 2:
                    new[i] ^= a2 * w[i - 2]
                new[i] ^= a3 * ww[i] ^ a6 * www[i]
            w = new
        u = w[3:3 + n]           # w / t^3
        uinv = s_inv(u, n, F)    # t^3 y
        x = uinv                 # x = t / w = t^-2 * (t^3/w): t^2 x = t^3 y
        return x, uinv


# ------------------------------------------------------------ closed points


@dataclass(frozen=True)
class ClosedPoint:
    degree: int
    rep: object  # O or (x, y) over F_{2^degree}, least point of its orbit

    def label(self) -> str:
        if self.rep == O:
            return "O"
        return f"{self.degree}.{self.rep[0]:x}.{self.rep[1]:x}"


def _frob(P, F):
    return O if P == O else (F.mul(P[0], P[0]), F.mul(P[1], P[1]))


@lru_cache(maxsize=None)
def closed_points(E: Elliptic, maxdeg: int = 5) -> tuple:
    out = []
    for d in range(1, maxdeg + 1):
        F = make_field(d)
        for P in E.points(d):
            orbit = [P]
            Q = _frob(P, F)
            while Q != P:
                orbit.append(Q)
                Q = _frob(Q, F)
            if len(orbit) == d and (P == O or P == min(q for q in orbit)):
                out.append(ClosedPoint(d, P))
    return tuple(out)


def effective_divisors(E: Elliptic, degree: int = 5) -> list:
    """All effective divisors of the given degree as sorted tuples of
    (closed point index, multiplicity)."""
    cps = closed_points(E)
    out = []

    def rec(start, left, acc):
        if left == 0:
            out.append(tuple(acc))
            return
        for i in range(start, len(cps)):
            d = cps[i].degree
            for n in range(1, left // d + 1):
                rec(i + 1, left - n * d, acc + [(i, n)])

    rec(0, degree, [])
    return out


def divisor_label(E, D) -> str:
    cps = closed_points(E)
    return "+".join(f"{cps[i].label()}*{n}" for i, n in D)


# ------------------------------------------------------------ Riemann-Roch


def _embed_to(P, d, k):
    from ..binfield import embed
    if P == O:
        return O
    return (embed(P[0], d, k), embed(P[1], d, k))


@dataclass
class RRSpace:
    """Basis of L(D) as pairs (polynomial g = a(x) + b(x) y, common
    denominator h(x)); monomials x^i y^j are indexed by ``mons``."""
    h: int
    mons: list
    basis: list  # F_2 coefficient ints over mons


def _xmin(E, cp):
    """Minimal polynomial over F_2 of the x-coordinate of an affine closed point."""
    F = make_field(cp.degree)
    return F.minpoly(cp.rep[0])


def _poly_series(poly: int, xs, n, F):
    """Series of a binary polynomial in x(t)."""
    out = [0] * n
    pw = [1] + [0] * (n - 1)
    i = 0
    while poly >> i:
        if poly >> i & 1:
            out = [u ^ v for u, v in zip(out, pw)]
        pw = s_mul(pw, xs, n, F)
        i += 1
    return out


def _mon_series(mons, xs, ys, n, F):
    """Series of each monomial x^i y^j at a point."""
    xp = [[1] + [0] * (n - 1)]
    imax = max(i for i, _ in mons)
    for _ in range(imax):
        xp.append(s_mul(xp[-1], xs, n, F))
    return [xp[i] if j == 0 else s_mul(xp[i], ys, n, F) for i, j in mons]


def riemann_roch(E: Elliptic, D) -> RRSpace:
    """L(D) for an effective divisor D (tuple of (closed point index, n))."""
    cps = closed_points(E)
    h = 1
    nO = 0
    for i, n in D:
        cp = cps[i]
        if cp.rep == O:
            nO = n
        else:
            for _ in range(n):
                h = _pmul(h, _xmin(E, cp))
        # points sharing x with cp are handled by the vanishing conditions below
    N = 2 * (h.bit_length() - 1) + nO
    mons = [(i, 0) for i in range(N // 2 + 1)] + [(i, 1) for i in range((N - 3) // 2 + 1) if N >= 3]
    mult = dict((i, n) for i, n in D)
    cols = [0] * len(mons)
    row = 0
    for idx, cp in enumerate(cps):
        if cp.rep == O:
            continue
        F = make_field(cp.degree)
        # order of h at cp
        prec = 2 * (h.bit_length()) + 2
        xs, ys = E.local_xy(cp.rep, cp.degree, prec)
        hs = _poly_series(h, xs, prec, F)
        vh = s_val(hs)
        if vh is None or vh == 0:
            continue
        need = vh - mult.get(idx, 0)
        if need <= 0:
            continue
        ser = _mon_series(mons, xs, ys, need, F)
        for k in range(need):
            for bit in range(cp.degree):
                for m, s in enumerate(ser):
                    if s[k] >> bit & 1:
                        cols[m] |= 1 << row
                row += 1
    basis = kernel(cols)
    return RRSpace(h, mons, basis)


def _pmul(a, b):
    from ..polyform import pmul
    return pmul(a, b)


# ------------------------------------------------------------ evaluation


def _value(E, g_coeffs, space: RRSpace, P, k):
    """Value of g/h at a point P over F_{2^k} not a pole of g/h (may be a zero of h)."""
    F = make_field(k)
    if P == O:
        return _value_O(E, g_coeffs, space, k)
    x, y = P
    hv = _peval(space.h, x, F)
    if hv:
        return F.div(_geval(g_coeffs, space.mons, x, y, F), hv)
    prec = 2 * space.h.bit_length() + 2
    xs, ys = E.local_xy(P, k, prec)
    hs = _poly_series(space.h, xs, prec, F)
    gs = [0] * prec
    ser = _mon_series(space.mons, xs, ys, prec, F)
    for m, s in enumerate(ser):
        if g_coeffs >> m & 1:
            gs = [u ^ v for u, v in zip(gs, s)]
    vh, vg = s_val(hs), s_val(gs)
    if vg is None or vg > vh:
        return 0
    if vg < vh:
        raise ValueError("evaluation at a pole")
    return F.div(gs[vg], hs[vh])


def _value_O(E, g, space, k):
    """Value at O: compare pole orders of g and h."""
    deg_h = space.h.bit_length() - 1
    pole_h = 2 * deg_h
    pole_g = -1
    lead = 0
    for m, (i, j) in enumerate(space.mons):
        if g >> m & 1:
            p = 2 * i + 3 * j
            if p > pole_g:
                pole_g = p
    if pole_g < pole_h:
        return 0
    if pole_g > pole_h:
        raise ValueError("evaluation at a pole")
    # leading coefficients at O are 1 for x^i (t^-2i) and y x^i (t^-(2i+3))
    for m, (i, j) in enumerate(space.mons):
        if g >> m & 1 and 2 * i + 3 * j == pole_g:
            lead ^= 1
    return lead


def _peval(poly, x, F):
    r = 0
    for i in range(poly.bit_length() - 1, -1, -1):
        r = F.mul(r, x) ^ (poly >> i & 1)
    return r


def _geval(g, mons, x, y, F):
    r = 0
    xp = {}
    for m, (i, j) in enumerate(mons):
        if g >> m & 1:
            if i not in xp:
                xp[i] = F.pow(x, i)
            v = xp[i]
            if j:
                v = F.mul(v, y)
            r ^= v
    return r


@lru_cache(maxsize=None)
def point_layout(E: Elliptic):
    """Global indexing of all points of E(F_{2^k}), k = 1..KMAX: list of
    (k, point, bit offset)."""
    out = []
    off = 0
    for k in range(1, KMAX + 1):
        for P in E.points(k):
            out.append((k, P, off))
            off += k
    return tuple(out)


def _support_points(E, D):
    """Set of (k, point) lying over supp D."""
    cps = closed_points(E)
    out = set()
    for i, _ in D:
        cp = cps[i]
        for k in range(1, KMAX + 1):
            if k % cp.degree:
                continue
            F = make_field(k)
            P = _embed_to(cp.rep, cp.degree, k)
            Q = P
            while True:
                out.add((k, Q))
                Q = _frob(Q, F)
                if Q == P:
                    break
    return out


def eval_vector(E, g, space, D, supp=None) -> int:
    if supp is None:
        supp = _support_points(E, D)
    v = 0
    for k, P, off in point_layout(E):
        if (k, P) in supp:
            continue
        v |= _value(E, g, space, P, k) << off
    return v


def wp_vector(E, vec: int) -> int:
    """Pointwise h -> h^2 + h on an evaluation vector."""
    out = 0
    for k, P, off in point_layout(E):
        F = make_field(k)
        x = vec >> off & ((1 << k) - 1)
        out |= (F.mul(x, x) ^ x) << off
    return out


# ------------------------------------------------------------ local reduction


def laurent_at(E, g, space: RRSpace, cp: ClosedPoint, order: int):
    """Coefficients of t^-order .. t^-1 of g/h at a closed point (in the
    residue field), as a list indexed by pole order (index m -> t^-m)."""
    if cp.rep == O:
        return _laurent_O(E, g, space, order)
    d = cp.degree
    F = make_field(d)
    prec = 2 * space.h.bit_length() + order + 4
    xs, ys = E.local_xy(cp.rep, d, prec)
    hs = _poly_series(space.h, xs, prec, F)
    vh = s_val(hs)
    gs = [0] * prec
    for m, s in enumerate(_mon_series(space.mons, xs, ys, prec, F)):
        if g >> m & 1:
            gs = [u ^ v for u, v in zip(gs, s)]
    hin = s_inv(hs[vh:], prec - vh, F)
    q = s_mul(gs, hin, prec - vh, F)   # f = t^-vh * q
    out = [0] * (order + 1)
    for m in range(1, order + 1):
        i = vh - m
        if 0 <= i < len(q):
            out[m] = q[i]
    return out


def _laurent_O(E, g, space, order):
    F = make_field(1)
    n = 2 * len(space.mons) + order + 8
    X, Y = E.local_at_O(n)   # x = t^-2 X, y = t^-3 Y
    deg_h = space.h.bit_length() - 1
    # g as t^-P * series with P = max pole
    P = max(2 * i + 3 * j for i, j in space.mons)
    gs = [0] * n
    for m, (i, j) in enumerate(space.mons):
        if g >> m & 1:
            s = [1] + [0] * (n - 1)
            for _ in range(i):
                s = s_mul(s, X, n, F)
            if j:
                s = s_mul(s, Y, n, F)
            shift = P - (2 * i + 3 * j)
            for a in range(n - shift):
                gs[a + shift] ^= s[a]
    hs = [0] * n
    s = [1] + [0] * (n - 1)
    hp = space.h
    # h(x) = sum c_i x^i = t^-2deg_h sum c_i t^(2(deg_h - i)) X^i
    xpow = [1] + [0] * (n - 1)
    for i in range(deg_h + 1):
        if hp >> i & 1:
            shift = 2 * (deg_h - i)
            for a in range(n - shift):
                hs[a + shift] ^= xpow[a]
        xpow = s_mul(xpow, X, n, F)
    # f = t^-(P - 2 deg_h) * gs / hs
    q = s_mul(gs, s_inv(hs, n, F), n, F)
    lead = P - 2 * deg_h
    out = [0] * (order + 1)
    for m in range(1, order + 1):
        i = lead - m
        if 0 <= i < n:
            out[m] = q[i]
    return out


def reduced_order(coeffs, d: int) -> int:
    """Artin-Schreier reduced pole order from coefficients c_m of t^-m."""
    F = make_field(d)
    c = list(coeffs)
    m = len(c) - 1
    while m > 0:
        if c[m] == 0:
            m -= 1
            continue
        if m % 2:
            return m
        s = F.sqrt(c[m])
        c[m] = 0
        c[m // 2] ^= s
        m -= 1
    return 0


# ------------------------------------------------------------ per-divisor data


@dataclass
class DivisorData:
    E: Elliptic
    D: tuple
    L1: RRSpace
    L2: RRSpace
    supp: set
    l1_vecs: list          # evaluation vectors of L(D) basis
    wp_rows: dict          # echelon of h^2 + h over L(D)
    l2_vecs: list          # evaluation vectors of L(2D) basis
    laurent: list          # per basis element of L(2D): {cp index: coeff list}
    complement: list = field(default_factory=list)  # indices into L2 basis


@lru_cache(maxsize=None)
def divisor_data(base: int, D: tuple) -> DivisorData:
    E = elliptic(base)
    cps = closed_points(E)
    L1 = riemann_roch(E, D)
    D2 = tuple((i, 2 * n) for i, n in D)
    L2 = riemann_roch(E, D2)
    deg = sum(cps[i].degree * n for i, n in D)
    if len(L1.basis) != deg or len(L2.basis) != 2 * deg:
        raise RuntimeError(f"Riemann-Roch dimension mismatch for {divisor_label(E, D)}")
    supp = _support_points(E, D)
    l1 = [eval_vector(E, g, L1, D, supp) for g in L1.basis]
    wp = echelon([wp_vector(E, v) for v in l1])
    l2 = [eval_vector(E, g, L2, D, supp) for g in L2.basis]
    laur = []
    for g in L2.basis:
        laur.append({i: laurent_at(E, g, L2, cps[i], 2 * n) for i, n in D})
    data = DivisorData(E, D, L1, L2, supp, l1, wp, l2, laur)
    rows = dict(wp)
    for idx, v in enumerate(l2):
        r = reduce(v, rows)
        if r:
            data.complement.append(idx)
            rows = echelon(list(rows.values()) + [r])
    if len(data.complement) != 2 * deg - (deg - 1):
        raise RuntimeError("unexpected quotient dimension")
    return data


def class_is_exact(data: DivisorData, combo: int) -> bool:
    """Reduced pole order 2 n_P - 1 at every P in supp D."""
    cps = closed_points(data.E)
    for i, n in data.D:
        coeffs = [0] * (2 * n + 1)
        for b, idx in enumerate(data.complement):
            if combo >> b & 1:
                coeffs = [u ^ v for u, v in zip(coeffs, data.laurent[idx][i])]
        if reduced_order(coeffs, cps[i].degree) != 2 * n - 1:
            return False
    return True


def class_vector(data: DivisorData, combo: int) -> int:
    v = 0
    for b, idx in enumerate(data.complement):
        if combo >> b & 1:
            v ^= data.l2_vecs[idx]
    return reduce(v, data.wp_rows)


# ------------------------------------------------------------ symmetries


@lru_cache(maxsize=None)
def elliptic(base: int) -> Elliptic:
    return Elliptic(base, BASES[base])


@lru_cache(maxsize=None)
def aut_EO(base: int) -> tuple:
    """(r, s, t) with (x, y) -> (x + r, y + s x + t) an automorphism fixing O."""
    E = elliptic(base)
    out = []
    for r, s, t in itertools.product((0, 1), repeat=3):
        ok = True
        for k in (4, 5):
            F = make_field(k)
            for P in E.points(k)[1:]:
                x, y = P
                if not E.on_curve(x ^ r, y ^ (s * x) ^ t, F):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append((r, s, t))
    return tuple(out)


def _apply_aut(rst, P, F):
    if P == O:
        return O
    r, s, t = rst
    x, y = P
    return (x ^ r, y ^ (s * x) ^ t)


@lru_cache(maxsize=None)
def curve_automorphisms(base: int) -> tuple:
    """E(F_2) x| Aut(E, O) as (translation point, (r, s, t)): P -> alpha(P) + T."""
    E = elliptic(base)
    return tuple((T, a) for T in E.points(1) for a in aut_EO(base))


def apply_sigma(E, sigma, P, k):
    F = make_field(k)
    T, a = sigma
    return E.add(_apply_aut(a, P, F), _embed_to(T, 1, k), F)


@lru_cache(maxsize=None)
def sigma_tables(base: int):
    """Per automorphism: bit-position permutation of evaluation vectors
    (value at P of f o sigma^-1 is the value of f at sigma^-1 P) and the
    permutation of closed points."""
    E = elliptic(base)
    layout = point_layout(E)
    where = {(k, P): (off, k) for k, P, off in layout}
    cps = closed_points(E)
    cp_index = {}
    for i, cp in enumerate(cps):
        F = make_field(cp.degree)
        Q = cp.rep
        while True:
            cp_index[(cp.degree, Q)] = i
            Q = _frob(Q, F)
            if Q == cp.rep:
                break
    out = []
    for sigma in curve_automorphisms(base):
        # f o sigma^-1 at P = f at sigma^-1(P): the new value at sigma(Q) is the old value at Q
        moves = []
        for k, P, off in layout:
            Q = apply_sigma(E, sigma, P, k)
            moves.append((off, where[(k, Q)][0], k))
        cp_perm = [cp_index[(cp.degree, apply_sigma(E, sigma, cp.rep, cp.degree))] for cp in cps]
        out.append((sigma, moves, cp_perm))
    return out


def _move_vector(v, moves):
    out = 0
    for src, dst, k in moves:
        out |= (v >> src & ((1 << k) - 1)) << dst
    return out


def _move_divisor(D, cp_perm):
    return tuple(sorted((cp_perm[i], n) for i, n in D))


# ------------------------------------------------------------ enumeration


@dataclass
class Cover:
    base: int
    D: tuple
    vec: int            # normal-form evaluation vector of f
    coeffs: int         # f in the fixed basis of L(2D)
    aut_order: int = 0
    fingerprint: str | None = None
    counts: tuple = ()

    def model(self) -> str:
        E = elliptic(self.base)
        return f"biell:{self.base}:{divisor_label(E, self.D)}:{self.coeffs:x}"


def _coords_in_L2(data: DivisorData, vec: int) -> int:
    x = solve(data.l2_vecs, vec)
    if x is None:
        raise RuntimeError("normal form left L(2D)")
    return x


def _key(D, vec):
    return (D, vec)


def covers_for(base: int, D: tuple) -> list:
    """Canonical covers (orbit minima) with ramification divisor 2D."""
    data = divisor_data(base, D)
    tabs = sigma_tables(base)
    out = []
    for combo in range(1 << len(data.complement)):
        if not class_is_exact(data, combo):
            continue
        vec = class_vector(data, combo)
        best = True
        stab = []
        for sigma, moves, cp_perm in tabs:
            D2 = _move_divisor(D, cp_perm)
            if D2 < D:
                best = False
                break
            if D2 != D:
                continue
            v2 = reduce(_move_vector(vec, moves), data.wp_rows)
            if v2 < vec:
                best = False
                break
            if v2 == vec:
                stab.append((sigma, moves))
        if not best:
            continue
        c = Cover(base, D, vec, _coords_in_L2(data, vec))
        c.aut_order = 2 * len(stab)
        c.fingerprint = _fingerprint(data, vec, stab)
        c.counts = cover_counts(data, vec)
        out.append(c)
    return out


def cover_counts(data: DivisorData, vec: int) -> tuple:
    counts = [0] * KMAX
    for k, P, off in point_layout(data.E):
        if (k, P) in data.supp:
            counts[k - 1] += 1
            continue
        F = make_field(k)
        if F.trace(vec >> off & ((1 << k) - 1)) == 0:
            counts[k - 1] += 2
    return tuple(counts)


def _fingerprint(data, vec, stab):
    """Orders of the lifts (sigma, z -> z + u) of each stabilizer element,
    u^2 + u = f o sigma - f (two lifts per sigma)."""
    E = data.E
    layout = point_layout(E)
    wp_l1 = [wp_vector(E, v) for v in data.l1_vecs]
    orders = []
    for sigma, moves in stab:
        # f o sigma at P = f(sigma P): inverse move
        inv = [(dst, src, k) for src, dst, k in moves]
        target = _move_vector(vec, inv) ^ vec
        x = solve(wp_l1, target)
        if x is None:
            raise RuntimeError("stabilizer element without a lift")
        u = 0
        for b in range(len(data.l1_vecs)):
            if x >> b & 1:
                u ^= data.l1_vecs[b]
        n = _sigma_order(E, sigma)
        # s = sum_{i<n} u(sigma^i R) at a rational-over-F_64 point R off supp D
        k, R, off = next((k, P, o) for k, P, o in layout if k == KMAX and (k, P) not in data.supp)
        where = {(kk, P): o for kk, P, o in layout}
        s, Q = 0, R
        for _ in range(n):
            s ^= u >> where[(k, Q)] & ((1 << k) - 1)
            Q = apply_sigma(E, sigma, Q, k)
        if s not in (0, 1):
            raise RuntimeError("lift sum is not a constant of F_2")
        orders.append(n if s == 0 else 2 * n)
        # the other lift u + 1 adds n mod 2 to the sum
        s2 = s ^ (n & 1)
        orders.append(n if s2 == 0 else 2 * n)
    return fingerprint_from_orders(orders).name


def _sigma_order(E, sigma) -> int:
    k = KMAX
    pts = E.points(k)
    n = 1
    while True:
        ok = True
        for P in pts:
            Q = P
            for _ in range(n):
                Q = apply_sigma(E, sigma, Q, k)
            if Q != P:
                ok = False
                break
        if ok:
            return n
        n += 1


def biell_units():
    return [(b, D) for b in range(len(BASES)) for D in effective_divisors(elliptic(b))]


def biell_enumerate(shard=None) -> list:
    out = []
    for b, D in select_units(biell_units(), shard):
        out.extend(covers_for(b, D))
    return out


def biell_records(shard=None) -> list:
    return [make_record("biell", c.model(), c.counts, c.aut_order, c.fingerprint)
            for c in biell_enumerate(shard)]


def biell_aut_order(c: Cover) -> int:
    return c.aut_order


def biell_counts(c: Cover, k: int) -> int:
    return c.counts[k - 1]


# ------------------------------------------------------------ mass formula


def dn_series(a: int, q: int, n_max: int) -> list:
    """Coefficients of (1-T^2)(1-qT^2)(1-aT+qT^2) / ((1-T)(1-qT)(1-aT^2+qT^4))."""
    num = _pm([1, 0, -1], [1, 0, -q])
    num = _pm(num, [1, -a, q])
    den = _pm([1, -1], [1, -q])
    den = _pm(den, [1, 0, -a, 0, q])
    out = []
    for n in range(n_max + 1):
        v = num[n] if n < len(num) else 0
        for j in range(1, min(n, len(den) - 1) + 1):
            v -= den[j] * out[n - j]
        out.append(v)
    return out


def _pm(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def biell_mass_closed_form(g: int, q: int) -> Fraction:
    if not 6 <= g <= 11:
        raise ValueError("closed form proven only for 6 <= g <= 11")
    num = q ** (2 * g) - q ** (2 * g - 4) - q ** (2 * g - 5) + (-1) ** (g + 1) * q
    val = Fraction(num, q * q + 1)
    if val.denominator != 1:
        raise ArithmeticError("closed form is not an integer")
    return val


def _is_prime(n):
    return n > 1 and all(n % p for p in range(2, int(n ** 0.5) + 1))


def weierstrass_traces(q: int) -> list:
    """(a(E), weight) over nonsingular y^2 = x^3 + A x + B, weight 1/(q-1)."""
    if q % 2 == 0 or not _is_prime(q):
        raise ValueError("q must be an odd prime")
    if q == 3:
        return _traces_char3()
    sq = {}
    for y in range(q):
        sq[y * y % q] = sq.get(y * y % q, 0) + 1
    out = []
    for A in range(q):
        for B in range(q):
            if (4 * A ** 3 + 27 * B * B) % q == 0:
                continue
            n = 1 + sum(sq.get((x ** 3 + A * x + B) % q, 0) for x in range(q))
            out.append((q + 1 - n, Fraction(1, q - 1)))
    return out


def _traces_char3():
    """Characteristic 3: general models y^2 = x^3 + a2 x^2 + a4 x + a6 up to
    x -> u^2 x + r, y -> u^3 y; the isomorphism group of such models has
    order 2 q = 6 and each curve E appears 6/#Aut(E) times, so weight 1/6."""
    q = 3
    out = []
    for a2, a4, a6 in itertools.product(range(q), repeat=3):
        # discriminant of x^3 + a2 x^2 + a4 x + a6 (nonzero iff smooth)
        disc = (a2 * a2 * a4 * a4 - 4 * a4 ** 3 - 4 * a2 ** 3 * a6
                + 18 * a2 * a4 * a6 - 27 * a6 * a6) % q
        if disc == 0:
            continue
        n = 1
        for x in range(q):
            v = (x ** 3 + a2 * x * x + a4 * x + a6) % q
            n += 1 if v == 0 else (2 if pow(v, (q - 1) // 2, q) == 1 else 0)
        out.append((q + 1 - n, Fraction(1, 2 * q)))
    return out


def birch_moment(q: int, power: int) -> Fraction:
    return sum((w * a ** power for a, w in weierstrass_traces(q)), Fraction(0))


BIRCH_MOMENTS = {
    0: lambda q: q,
    2: lambda q: q ** 2 - 1,
    4: lambda q: 2 * q ** 3 - 3 * q - 1,
    6: lambda q: 5 * q ** 4 - 9 * q ** 2 - 5 * q - 1,
    8: lambda q: 14 * q ** 5 - 28 * q ** 3 - 20 * q ** 2 - 7 * q - 1,
}


def f2_traces() -> list:
    """(a(E), 1/#Aut(E)) over the five curves E/F_2."""
    out = []
    for b in range(len(BASES)):
        E = elliptic(b)
        out.append((3 - len(E.points(1)), Fraction(1, len(aut_EO(b)))))
    return out


def biell_mass_integral(g: int, q: int) -> Fraction:
    """Sum over the stacky measure on M_{1,1}(F_q) of d_{2g-2}(E)/#E(F_q)."""
    if q == 2:
        traces = f2_traces()
    elif q % 2 == 0 or not _is_prime(q):
        raise ValueError("q must be 2 or an odd prime")
    else:
        traces = weierstrass_traces(q)
    total = Fraction(0)
    for a, w in traces:
        d = dn_series(a, q, 2 * g - 2)
        total += w * Fraction(d[2 * g - 2], q - a + 1)
    return total


def integrated_series(q: int, n_max: int = 9) -> list:
    """Coefficients of sum_E w(E) / (1 - a(E) T + q T^2) modulo T^(n_max+1)."""
    out = [Fraction(0)] * (n_max + 1)
    for a, w in weierstrass_traces(q):
        c = [Fraction(1)]
        for n in range(1, n_max + 1):
            v = a * c[n - 1] - (q * c[n - 2] if n >= 2 else 0)
            c.append(Fraction(v))
        for n in range(n_max + 1):
            out[n] += w * c[n]
    return out
