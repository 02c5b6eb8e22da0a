"""Point counts, L-polynomials and their admissibility tests.

The L-polynomial of a genus-g curve over F_q is L(T) = prod (1 - alpha_j T)
with q^k + 1 - N_k = sum_j alpha_j^k.  Coefficients are stored low degree
first, a_0 = 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path


class WeilError(ValueError):
    pass


@dataclass(frozen=True)
class WeilData:
    q: int
    g: int
    counts: tuple
    lpoly: tuple
    newton: tuple = field(default=(), compare=False)

    @property
    def zeta_key(self) -> tuple:
        return tuple(self.counts[: self.g])

    def extended_counts(self, n: int) -> tuple:
        return lpoly_to_counts(self.lpoly, self.q, n)

    @property
    def supersingular(self) -> bool:
        return all(s == Fraction(1, 2) for s in self.newton)


def _newton_from_counts(counts, q, n):
    """a_1..a_n from point counts N_1..N_n (n <= len(counts))."""
    s = [None] + [q ** i + 1 - counts[i - 1] for i in range(1, n + 1)]
    a = [1]
    for m in range(1, n + 1):
        tot = sum(s[k] * a[m - k] for k in range(1, m + 1))
        if tot % m:
            raise WeilError(f"non-integral L-polynomial coefficient a_{m}")
        a.append(-tot // m)
    return a


def counts_to_lpoly(counts, q: int = 2, g: int | None = None) -> WeilData:
    """L-polynomial from N_1..N_g via Newton's identities and the
    functional equation a_{2g-i} = q^(g-i) a_i."""
    counts = tuple(int(c) for c in counts)
    if g is None:
        g = len(counts)
    if len(counts) < g:
        raise WeilError(f"need {g} point counts, got {len(counts)}")
    a = _newton_from_counts(counts, q, g)
    full = a + [q ** (g - i) * a[i] for i in range(g - 1, -1, -1)]
    lp = tuple(full)
    return WeilData(q=q, g=g, counts=counts[:g], lpoly=lp,
                    newton=newton_polygon_of(lp, q))


def lpoly_to_counts(lpoly, q: int, n: int) -> tuple:
    """N_1..N_n from the L-polynomial."""
    a = list(lpoly) + [0] * max(0, n + 1 - len(lpoly))
    s = [0] * (n + 1)
    for m in range(1, n + 1):
        s[m] = -m * a[m] - sum(s[k] * a[m - k] for k in range(1, m))
    return tuple(q ** m + 1 - s[m] for m in range(1, n + 1))


def closed_point_counts(counts) -> list[int]:
    """b_d = number of closed points of degree d, from N_1..N_n."""
    n = len(counts)
    out = []
    for d in range(1, n + 1):
        tot = sum(_mobius(d // e) * counts[e - 1] for e in range(1, d + 1) if d % e == 0)
        out.append(Fraction(tot, d))
    return out


def _mobius(n):
    res, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            res = -res
        p += 1
    return -res if n > 1 else res


# ------------------------------------------------------- unitarity (Sturm)


def real_weil_poly(lpoly, q: int, g: int) -> list[int]:
    """h with T^g h(T + q/T) = T^(2g) L(1/T); coefficients low degree first."""
    # D_m(x) represents T^m + q^m T^-m as a polynomial in x = T + q/T
    D = [[2], [0, 1]]
    for m in range(2, g + 1):
        prev, pprev = D[m - 1], D[m - 2]
        nxt = [0] + prev
        for i, c in enumerate(pprev):
            nxt[i] -= q * c
        D.append(nxt)
    h = [0] * (g + 1)
    h[0] = lpoly[g]
    for i in range(g):
        for j, c in enumerate(D[g - i]):
            h[j] += lpoly[i] * c
    return h


def _ptrim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _prem(a, b):
    a = [Fraction(x) for x in a]
    while len(a) >= len(b) and a:
        c = a[-1] / b[-1]
        s = len(a) - len(b)
        for i, bc in enumerate(b):
            a[s + i] -= c * bc
        a = _ptrim(a)
    return a


def _pgcd(a, b):
    a, b = _ptrim(a), _ptrim(b)
    while b:
        a, b = b, _prem(a, b)
    return a


def _deriv(p):
    return [i * p[i] for i in range(1, len(p))]


def _sturm(p):
    seq = [_ptrim([Fraction(x) for x in p]), _ptrim([Fraction(x) for x in _deriv(p)])]
    while seq[-1]:
        r = _prem(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])
    return [s for s in seq if s]


def _sign_at_surd(p, u, v, q):
    """Sign of p(u + v sqrt(q)) with rational u, v."""
    a, b = Fraction(0), Fraction(0)  # value = a + b sqrt(q)
    for c in reversed(p):
        a, b = a * u + b * v * q + c, a * v + b * u
    if a == 0 and b == 0:
        return 0
    if a >= 0 and b >= 0:
        return 1
    if a <= 0 and b <= 0:
        return -1
    # opposite signs: compare a^2 with q b^2
    lhs, rhs = a * a, q * b * b
    if lhs == rhs:
        return 0
    return (1 if a > 0 else -1) if lhs > rhs else (1 if b > 0 else -1)


def _variations(signs):
    s = [x for x in signs if x != 0]
    return sum(1 for i in range(1, len(s)) if s[i] != s[i - 1])


def unitary(lpoly, q: int, g: int) -> bool:
    """All reciprocal roots of L have absolute value sqrt(q), decided exactly."""
    h = real_weil_poly(lpoly, q, g)
    sq = _pgcd(h, _deriv(h))
    ndist = (len(_ptrim(h)) - 1) - (len(sq) - 1)
    seq = _sturm(h)

    def at_inf(sign):
        return [(1 if s[-1] > 0 else -1) * (sign ** (len(s) - 1)) for s in seq]

    if _variations(at_inf(-1)) - _variations(at_inf(1)) != ndist:
        return False
    # roots inside [-2 sqrt q, 2 sqrt q]: surd endpoints +-2 sqrt(q)
    lo = [_sign_at_surd(s, Fraction(0), Fraction(-2), q) for s in seq]
    hi = [_sign_at_surd(s, Fraction(0), Fraction(2), q) for s in seq]
    inside = _variations(lo) - _variations(hi) + (1 if lo[0] == 0 else 0)
    return inside == ndist


def serre_bound(g: int, q: int) -> int | None:
    # only the value used by the census is tabulated
    return {(6, 2): 10}.get((g, q))


def admissible(w: WeilData) -> bool:
    a, g, q = w.lpoly, w.g, w.q
    if len(a) != 2 * g + 1 or a[0] != 1:
        return False
    if any(a[2 * g - i] != q ** (g - i) * a[i] for i in range(g + 1)):
        return False
    if not unitary(a, q, g):
        return False
    ext = lpoly_to_counts(a, q, 2 * g)
    if ext[: len(w.counts)] != tuple(w.counts):
        return False
    if ext[0] < 0 or any(b < 0 for b in closed_point_counts(ext)):
        return False
    bound = serre_bound(g, q)
    if bound is not None and ext[0] > bound:
        return False
    return True


# --------------------------------------------------------- Newton polygons


def _v2(n: int) -> int:
    n = abs(n)
    return (n & -n).bit_length() - 1


def newton_polygon_of(lpoly, q: int = 2) -> tuple:
    """Slopes (as Fractions, ascending) of the q-adic Newton polygon."""
    vq = _v2(q)
    pts = [(i, Fraction(_v2(c), vq)) for i, c in enumerate(lpoly) if c != 0]
    hull = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop hull[-1] if it lies on or above segment hull[-2] -> p
            if (y2 - y1) * (p[0] - x1) >= (p[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(p)
    slopes = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        slopes.extend([(y2 - y1) / (x2 - x1)] * (x2 - x1))
    return tuple(slopes)


def newton_polygon(w: WeilData, p: int = 2) -> tuple:
    return newton_polygon_of(w.lpoly, w.q)


# ----------------------------------------------------- isogeny-class lists


def load_isogeny_list(path) -> set[tuple]:
    """One class per line: 13 comma-separated integers a_0..a_12."""
    out = set()
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                vec = tuple(int(t) for t in line.split(","))
            except ValueError as exc:
                raise WeilError(f"{path}:{lineno}: malformed line {line!r}") from exc
            if len(vec) != 13 or vec[0] != 1:
                raise WeilError(f"{path}:{lineno}: expected 13 integers starting with 1")
            out.add(vec)
    return out


def save_isogeny_list(classes, path) -> None:
    Path(path).write_text("".join(",".join(map(str, v)) + "\n" for v in sorted(classes)))


def isogeny_prefilter(classes: set, q: int = 2, g: int = 6):
    """Count-vector membership test derived from an isogeny list.

    An empty list disables the filter (everything passes).
    """
    if not classes:
        return lambda counts: True
    keys = {lpoly_to_counts(v, q, g) for v in classes}
    return lambda counts: tuple(counts[:g]) in keys
