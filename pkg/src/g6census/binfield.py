"""Binary fields F_{2^k}, k <= 24, in the polynomial basis.

Elements are plain ints holding k coefficient bits.  The modulus for each
degree is a fixed primitive polynomial chosen so that the root of the
degree-d modulus is the norm-compatible power
x^((2^k-1)/(2^d-1)) of the root of the degree-k modulus whenever d | k.
That makes the embeddings F_{2^d} -> F_{2^k} a compatible system.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

MAX_DEGREE = 24

# degree -> modulus bits (bit i = coefficient of x^i); generated by a
# lexicographic search over primitive polynomials with the norm condition
MODULI = {
    1: 0x3, 2: 0x7, 3: 0xB, 4: 0x13, 5: 0x25, 6: 0x5B, 7: 0x83, 8: 0x11D,
    9: 0x211, 10: 0x46F, 11: 0x805, 12: 0x10EB, 13: 0x201B, 14: 0x40A9,
    15: 0x8035, 16: 0x1002D, 17: 0x20009, 18: 0x41403, 19: 0x80027,
    20: 0x1006F3, 21: 0x200065, 22: 0x401F61, 23: 0x800021, 24: 0x101E6A9,
}

TABLE_LIMIT = 12


def clmul(a: int, b: int) -> int:
    """Carry-less product of two bit polynomials."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
    return r


def clmod(a: int, m: int) -> int:
    dm = m.bit_length() - 1
    while a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


class FieldCtx:
    """Arithmetic context for F_{2^k}.

    For k <= 12 multiplication goes through log/antilog tables (``exp`` and
    ``log`` are numpy arrays also consumed by the jitted kernels); above
    that it is carry-less multiply followed by reduction.
    """

    def __init__(self, k: int):
        if not 1 <= k <= MAX_DEGREE:
            raise ValueError(f"extension degree {k} outside 1..{MAX_DEGREE}")
        self.k = k
        self.modulus = MODULI[k]
        self.size = 1 << k
        self.order = self.size - 1
        self.exp = None
        self.log = None
        if k <= TABLE_LIMIT:
            exp = np.zeros(2 * self.order + 1, dtype=np.int64)
            log = np.full(self.size, -1, dtype=np.int64)
            x = 1
            for i in range(self.order):
                exp[i] = x
                log[x] = i
                x = self._slow_mul(x, 2 if k > 1 else 1)
            exp[self.order:2 * self.order] = exp[:self.order]
            exp[2 * self.order] = exp[0]
            self.exp = exp
            self.log = log
            self._exp = exp.tolist()
            self._log = log.tolist()

    def __repr__(self):
        return f"FieldCtx(k={self.k}, modulus={self.modulus:#x})"

    def _slow_mul(self, a, b):
        return clmod(clmul(a, b), self.modulus)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._slow_mul(a, b)

    def sqr(self, a: int) -> int:
        return self.mul(a, a)

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self.exp is not None:
            return self._exp[(self._log[a] * e) % self.order]
        r = 1
        e %= self.order
        while e:
            if e & 1:
                r = self._slow_mul(r, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        if self.exp is not None:
            return self._exp[(self.order - self._log[a]) % self.order]
        return self.pow(a, self.order - 1)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def sqrt(self, a: int) -> int:
        # Frobenius has order k, so sqrt = x -> x^(2^(k-1))
        return self.pow(a, 1 << (self.k - 1)) if self.k > 1 else a

    def trace(self, a: int) -> int:
        t, x = 0, a
        for _ in range(self.k):
            t ^= x
            x = self.mul(x, x)
        return t

    def frob(self, a: int, times: int = 1) -> int:
        for _ in range(times % self.k):
            a = self.mul(a, a)
        return a

    def elements(self):
        return range(self.size)

    def generator(self) -> int:
        return 2 if self.k > 1 else 1

    def mult_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        n, e = 1, a
        while e != 1:
            e = self.mul(e, a)
            n += 1
        return n

    def degree_of(self, a: int) -> int:
        """Degree of the smallest subfield containing a."""
        x = a
        for d in range(1, self.k + 1):
            x = self.mul(x, x)
            if x == a:
                return d
        return self.k

    def minpoly(self, a: int) -> int:
        """Minimal polynomial of a over F_2 as a bit polynomial."""
        conj = [a]
        x = self.mul(a, a)
        while x != a:
            conj.append(x)
            x = self.mul(x, x)
        poly = [1]  # coefficients in the field, low degree first
        for c in conj:
            new = [0] * (len(poly) + 1)
            for i, pc in enumerate(poly):
                new[i + 1] ^= pc
                new[i] ^= self.mul(pc, c)
            poly = new
        bits = 0
        for i, pc in enumerate(poly):
            if pc not in (0, 1):
                raise ArithmeticError("minimal polynomial not over F_2")
            bits |= pc << i
        return bits


@lru_cache(maxsize=None)
def make_field(k: int) -> FieldCtx:
    return FieldCtx(k)


def trace(x: int, ctx: FieldCtx) -> int:
    return ctx.trace(x)


@lru_cache(maxsize=None)
def _embedding_root(d: int, k: int) -> int:
    big = make_field(k)
    return big.pow(big.generator(), big.order // ((1 << d) - 1))


def embed(x: int, d: int, k: int) -> int:
    """Image of x in F_{2^d} under the fixed embedding into F_{2^k}."""
    if k % d:
        raise ValueError(f"{d} does not divide {k}")
    if d == k:
        return x
    big = make_field(k)
    root = _embedding_root(d, k)
    r, p = 0, 1
    while x:
        if x & 1:
            r ^= p
        p = big.mul(p, root)
        x >>= 1
    return r


def embed_table(d: int, k: int) -> np.ndarray:
    """Lookup array for embed(., d, k) over all of F_{2^d}."""
    return np.array([embed(x, d, k) for x in range(1 << d)], dtype=np.int64)
