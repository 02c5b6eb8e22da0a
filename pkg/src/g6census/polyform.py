"""Univariate polynomials over F_2 / F_{2^k} and dense multi-homogeneous forms.

Polynomials over F_2 are ints (bit i = coefficient of x^i).  Polynomials over
F_{2^k} are lists of field elements, lowest degree first, without trailing
zeros.  A :class:`Form` stores its coefficients as an int bit-vector indexed by
a fixed monomial order (graded lex inside each variable block, blocks in the
declared order).
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from .binfield import FieldCtx, clmul, make_field

# ---------------------------------------------------------------- F_2[x]


def deg(a: int) -> int:
    return a.bit_length() - 1


def pmul(a: int, b: int) -> int:
    return clmul(a, b)


def pdivmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    q, db = 0, deg(b)
    while a and deg(a) >= db:
        s = deg(a) - db
        q |= 1 << s
        a ^= b << s
    return q, a


def pmod(a: int, b: int) -> int:
    return pdivmod(a, b)[1]


def gcd(a: int, b: int) -> int:
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0)")
    while b:
        a, b = b, pmod(a, b)
    return a  # monic automatically over F_2


def pderiv(a: int) -> int:
    # d/dx x^i = i x^(i-1): odd exponents survive
    n = a.bit_length()
    return (a >> 1) & int("01" * (n // 2 + 1), 2)


def psquare(a: int) -> int:
    r, i = 0, 0
    while a:
        if a & 1:
            r |= 1 << (2 * i)
        a >>= 1
        i += 1
    return r


def ppow(a: int, e: int) -> int:
    r = 1
    while e:
        if e & 1:
            r = pmul(r, a)
        a = pmul(a, a)
        e >>= 1
    return r


def pmulmod(a: int, b: int, m: int) -> int:
    return pmod(pmul(a, b), m)


def ppowmod(a: int, e: int, m: int) -> int:
    r = 1
    a = pmod(a, m)
    while e:
        if e & 1:
            r = pmulmod(r, a, m)
        a = pmulmod(a, a, m)
        e >>= 1
    return r


def peval(a: int, x: int, F: FieldCtx) -> int:
    """Evaluate a polynomial over F_2 at x in F."""
    r = 0
    for i in range(deg(a), -1, -1):
        r = F.mul(r, x)
        if a >> i & 1:
            r ^= 1
    return r


def reverse(a: int, n: int) -> int:
    """x^n a(1/x) for deg a <= n."""
    r = 0
    for i in range(n + 1):
        if a >> i & 1:
            r |= 1 << (n - i)
    return r


def pstr(a: int) -> str:
    if a == 0:
        return "0"
    terms = []
    for i in range(deg(a), -1, -1):
        if a >> i & 1:
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
    return " + ".join(terms)


def is_irreducible(a: int) -> bool:
    d = deg(a)
    if d <= 0:
        return False
    if d == 1:
        return True
    # Rabin: x^(2^d) = x mod a and gcd(x^(2^(d/p)) - x, a) = 1 for primes p | d
    x = 2
    if ppowmod(x, 1 << d, a) != pmod(x, a):
        return False
    for p in _prime_factors(d):
        h = ppowmod(x, 1 << (d // p), a) ^ x
        if gcd(a, h) != 1:
            return False
    return True


def _prime_factors(n):
    f, p = [], 2
    while p * p <= n:
        if n % p == 0:
            f.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        f.append(n)
    return f


def _squarefree_factor(a: int):
    """Squarefree decomposition of a monic a over F_2 as (part, multiplicity)."""
    if a == 1:
        return []
    d = pderiv(a)
    if d == 0:
        return [(f, 2 * m) for f, m in _squarefree_factor(_psqrt(a))]
    out = []
    c = gcd(a, d)
    w = pdivmod(a, c)[0]
    i = 1
    while w != 1:
        y = gcd(w, c)
        z = pdivmod(w, y)[0]
        if z != 1:
            out.append((z, i))
        i += 1
        w = y
        c = pdivmod(c, y)[0]
    if c != 1:
        out.extend((f, 2 * m) for f, m in _squarefree_factor(_psqrt(c)))
    return out


def _psqrt(a: int) -> int:
    r, i = 0, 0
    while a:
        if a & 1:
            r |= 1 << i
        a >>= 2
        i += 1
    return r


def _ddf(a: int):
    """Distinct-degree factorization of a squarefree monic polynomial."""
    out = []
    d = 1
    h = 2  # x
    while deg(a) >= 2 * d:
        h = pmulmod(h, h, a)
        g = gcd(a, h ^ 2)
        if g != 1:
            out.append((g, d))
            a = pdivmod(a, g)[0]
            h = pmod(h, a)
        d += 1
    if a != 1:
        out.append((a, deg(a)))
    return out


def _edf(a: int, d: int, rng: random.Random):
    """Equal-degree splitting over F_2 via the trace map."""
    if deg(a) == d:
        return [a]
    while True:
        r = rng.getrandbits(deg(a)) | 1
        t, x = r, r
        for _ in range(d - 1):
            x = pmulmod(x, x, a)
            t ^= x
        g = gcd(a, t)
        if 0 < deg(g) < deg(a):
            return _edf(g, d, rng) + _edf(pdivmod(a, g)[0], d, rng)


def factor(a: int) -> list[tuple[int, int]]:
    """Irreducible factorization over F_2 as sorted (factor, multiplicity)."""
    if a == 0:
        raise ValueError("factor(0)")
    rng = random.Random(deg(a))
    res: dict[int, int] = {}
    for sf, m in _squarefree_factor(a):
        for g, d in _ddf(sf):
            for f in _edf(g, d, rng):
                res[f] = res.get(f, 0) + m
    return sorted(res.items())


def irreducibles(d: int) -> list[int]:
    """Monic irreducible polynomials of degree d over F_2."""
    return [a for a in range(1 << d, 1 << (d + 1)) if is_irreducible(a)]


def resultant2(a: int, b: int) -> int:
    """Resultant over F_2 (an element of F_2)."""
    F = make_field(1)
    return resultant(to_coeffs(a), to_coeffs(b), F)


def to_coeffs(a: int) -> list[int]:
    return [(a >> i) & 1 for i in range(deg(a) + 1)]


# ------------------------------------------------------------- F_{2^k}[x]


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def fdivmod(a, b, F: FieldCtx):
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = F.inv(b[-1])
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = F.mul(a[-1], inv_lead)
        s = len(a) - len(b)
        q[s] = c
        for i, bc in enumerate(b):
            a[s + i] ^= F.mul(c, bc)
        _trim(a)
    return _trim(q), a


def fmul(a, b, F: FieldCtx):
    if not a or not b:
        return []
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] ^= F.mul(x, y)
    return _trim(r)


def fgcd(a, b, F: FieldCtx):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, fdivmod(a, b, F)[1]
    if a:
        inv = F.inv(a[-1])
        a = [F.mul(c, inv) for c in a]
    return a


def feval(a, x, F: FieldCtx):
    r = 0
    for c in reversed(a):
        r = F.mul(r, x) ^ c
    return r


def resultant(a, b, F: FieldCtx) -> int:
    """Resultant of two polynomials over F (coefficient lists)."""
    a, b = _trim(list(a)), _trim(list(b))
    if not a or not b:
        return 0
    res = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            return F.mul(res, F.pow(b[0], da))
        if da == 0:
            return F.mul(res, F.pow(a[0], db))
        r = fdivmod(a, b, F)[1]
        if not r:
            return 0
        dr = len(r) - 1
        # res(a, b) = (-1)^(da db) lc(b)^(da - dr) res(b, r); signs vanish in char 2
        res = F.mul(res, F.pow(b[-1], da - dr))
        a, b = b, r


# ------------------------------------------------------------------ forms


@lru_cache(maxsize=None)
def monomials(nvars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """Exponent vectors of a block in graded lex order (x0^d first)."""
    out = []

    def rec(prefix, left, remaining):
        if remaining == 1:
            out.append(tuple(prefix + [left]))
            return
        for e in range(left, -1, -1):
            rec(prefix + [e], left - e, remaining - 1)

    rec([], degree, nvars)
    return tuple(out)


class Form:
    """Dense multi-homogeneous form over F_2.

    ``blocks`` are the variable-block sizes, ``degrees`` the multidegree and
    ``coeffs`` the bit-vector in the fixed monomial order.
    """

    __slots__ = ("blocks", "degrees", "coeffs")

    def __init__(self, blocks, degrees, coeffs: int = 0):
        self.blocks = tuple(blocks)
        self.degrees = tuple(degrees)
        self.coeffs = int(coeffs)
        if self.coeffs >> form_dim(self.blocks, self.degrees):
            raise ValueError("coefficient vector longer than the monomial basis")

    def __eq__(self, other):
        return (isinstance(other, Form) and self.blocks == other.blocks
                and self.degrees == other.degrees and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.blocks, self.degrees, self.coeffs))

    def __repr__(self):
        return f"Form({self.blocks}, {self.degrees}, {self.hex()})"

    @property
    def dim(self) -> int:
        return form_dim(self.blocks, self.degrees)

    def hex(self) -> str:
        return format(self.coeffs, "x")

    @classmethod
    def from_hex(cls, blocks, degrees, s: str) -> "Form":
        return cls(blocks, degrees, int(s, 16))

    @classmethod
    def from_terms(cls, blocks, degrees, terms) -> "Form":
        """Build from an iterable of exponent tuples (one tuple per block)."""
        index = monomial_index(tuple(blocks), tuple(degrees))
        c = 0
        for t in terms:
            c ^= 1 << index[tuple(tuple(b) for b in t)]
        return cls(blocks, degrees, c)

    def terms(self):
        basis = form_basis(self.blocks, self.degrees)
        return [basis[i] for i in range(len(basis)) if self.coeffs >> i & 1]


@lru_cache(maxsize=None)
def form_basis(blocks, degrees):
    per_block = [monomials(n, d) for n, d in zip(blocks, degrees)]
    return tuple(itertools.product(*per_block))


@lru_cache(maxsize=None)
def monomial_index(blocks, degrees):
    return {m: i for i, m in enumerate(form_basis(blocks, degrees))}


def form_dim(blocks, degrees) -> int:
    return len(form_basis(tuple(blocks), tuple(degrees)))


def monomial_values(blocks, degrees, point, F: FieldCtx) -> list[int]:
    """Values of every basis monomial at a point (tuple of coordinate blocks)."""
    basis = form_basis(tuple(blocks), tuple(degrees))
    powers = [[_powers(c, d, F) for c in blk] for blk, d in zip(point, degrees)]
    out = []
    for mono in basis:
        v = 1
        for bi, exps in enumerate(mono):
            for vi, e in enumerate(exps):
                v = F.mul(v, powers[bi][vi][e])
                if v == 0:
                    break
        out.append(v)
    return out


def monomial_partials(blocks, degrees, point, F: FieldCtx) -> list[list[int]]:
    """partials[j][i] = d(monomial i)/d(variable j) at the point.

    Variables are numbered consecutively across blocks.
    """
    basis = form_basis(tuple(blocks), tuple(degrees))
    powers = [[_powers(c, d, F) for c in blk] for blk, d in zip(point, degrees)]
    nvars = sum(blocks)
    out = [[0] * len(basis) for _ in range(nvars)]
    for i, mono in enumerate(basis):
        var = 0
        for bi, exps in enumerate(mono):
            for vi, e in enumerate(exps):
                if e & 1:
                    # e * x^(e-1) * rest, e odd so the integer factor is 1
                    v = 1
                    for bj, exps2 in enumerate(mono):
                        for vj, e2 in enumerate(exps2):
                            ee = e2 - 1 if (bj, vj) == (bi, vi) else e2
                            v = F.mul(v, powers[bj][vj][ee])
                    out[var][i] = v
                var += 1
    return out


def _powers(x, d, F):
    p = [1]
    for _ in range(d):
        p.append(F.mul(p[-1], x))
    return p


def eval_form(f: Form, point, F: FieldCtx | None = None) -> int:
    """Value of f at a point given as a tuple of coordinate blocks."""
    if F is None:
        F = make_field(1)
    if len(point) != len(f.blocks):
        raise ValueError("point has the wrong number of blocks")
    for blk, n in zip(point, f.blocks):
        if len(blk) != n:
            raise ValueError("block size mismatch")
        if not any(blk):
            raise ValueError("block entirely zero")
    vals = monomial_values(f.blocks, f.degrees, point, F)
    r = 0
    c = f.coeffs
    i = 0
    while c:
        if c & 1:
            r ^= vals[i]
        c >>= 1
        i += 1
    return r


def projective_points(n: int, F: FieldCtx):
    """Points of P^{n-1}(F), first nonzero coordinate normalised to 1."""
    pts = []
    q = F.size
    for lead in range(n):
        for tail in itertools.product(range(q), repeat=n - lead - 1):
            pts.append((0,) * lead + (1,) + tail)
    return pts


def form_mul(f: Form, g: Form) -> Form:
    """Product of two forms on the same variable blocks."""
    if f.blocks != g.blocks:
        raise ValueError("forms on different variable blocks")
    degrees = tuple(a + b for a, b in zip(f.degrees, g.degrees))
    index = monomial_index(f.blocks, degrees)
    c = 0
    for s in f.terms():
        for t in g.terms():
            m = tuple(tuple(x + y for x, y in zip(bs, bt)) for bs, bt in zip(s, t))
            c ^= 1 << index[m]
    return Form(f.blocks, degrees, c)
