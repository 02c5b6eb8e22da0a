"""Brill-Noether general curves of genus 6: quadric sections of quintic
del Pezzo surfaces S = Gr(2,5) n P(W^perp), W a 4-dimensional space of
alternating forms on F_2^5.

Pipeline: orbit tree of GL_5(F_2) on 4-subsets of the 1023 nonzero forms,
collapse of independent 4-subsets to 4-dimensional subspaces, a surface
filter by point counts and singular point counts, and for each surface a
sweep over quadrics modulo the degree-2 part of its ideal.

Quadrics live on P^9 with coordinates the Plucker coordinates, which are
themselves alternating forms, so the pullback action of GL_5 on forms
acts on quadrics by substituting each coordinate by its image.
"""

from __future__ import annotations

import itertools
import json
import os
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

import numpy as np

from .._accel import njit
from ..binfield import make_field
from ..gf2 import echelon, reduce
from ..gl5 import (GL5_ORDER, NFORMS, form_matrices, form_perms, form_rank, generators,
                   gl5_elements)
from ..groupact import (PAIR_INDEX, PLUCKER_PAIRS, linear_tables, plucker_eval,
                        plucker_relations)
from ..orbitree import invert, tree_from_points
from ..records import make_record
from ..smoothcert import PointTable, pack_table
from ..weilzeta import WeilError, admissible, counts_to_lpoly
from .common import index_range

QUOTIENT_DIM = 21   # quadrics on P(W^perp) = P^5
REDUCED_DIM = 16    # after the five Plucker quadrics: h^0(S, -2K_S)

# ------------------------------------------------------------ orbit tree


@lru_cache(maxsize=None)
def dual_point_data():
    """(orbit representative per form index, transporters, stabilizers of
    the two representatives) for GL_5 acting on the 1023 forms."""
    G = gl5_elements()
    R = form_matrices(G)
    ranks = np.array([form_rank(f) for f in range(1, NFORMS + 1)])
    reps = {2: int(np.nonzero(ranks == 2)[0][0]), 4: int(np.nonzero(ranks == 4)[0][0])}
    orb_rep = np.array([reps[r] for r in ranks], dtype=np.int64)
    stabs = {}
    for idx in reps.values():
        w = idx + 1
        img = np.zeros(G.size, dtype=np.int64)
        for t in range(10):
            x = w & R[:, t]
            x ^= x >> 8
            x ^= x >> 4
            x ^= x >> 2
            x ^= x >> 1
            img |= (x & 1) << t
        stabs[idx] = form_perms(G[img == w])
    gens = form_perms(np.array(generators()))
    gens_inv = [invert(g) for g in gens]
    ident = np.arange(NFORMS, dtype=np.int16)
    trans = np.zeros((NFORMS, NFORMS), dtype=np.int16)
    seen = np.zeros(NFORMS, dtype=bool)
    for idx in reps.values():
        trans[idx] = ident
        seen[idx] = True
        queue = deque([idx])
        while queue:
            y = queue.popleft()
            for s, si in zip(gens, gens_inv):
                z = int(s[y])
                if not seen[z]:
                    seen[z] = True
                    trans[z] = trans[y][si]   # t_z = t_y o s^-1 sends z to the rep
                    queue.append(z)
    if not seen.all():
        raise RuntimeError("generators do not reach every form")
    return orb_rep, trans, stabs


@lru_cache(maxsize=None)
def dual_tree(K: int = 4):
    orb_rep, trans, stabs = dual_point_data()
    return tree_from_points(NFORMS, GL5_ORDER, orb_rep, trans, stabs, K)


# ------------------------------------------------------------ subspaces


def span_forms(forms) -> list[int]:
    """Nonzero elements of the span of some forms."""
    out = {0}
    for f in forms:
        out |= {x ^ f for x in out}
    out.discard(0)
    return sorted(out)


def _rank(vecs) -> int:
    return len(echelon(list(vecs)))


def gaussian_binomial(n: int, k: int, q: int = 2) -> int:
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def _bases(forms):
    pts = [f - 1 for f in span_forms(forms)]
    for B in itertools.combinations(pts, 4):
        if _rank([b + 1 for b in B]) == 4:
            yield B


@dataclass
class SubspaceOrbit:
    index: int               # level-4 representative of the canonical basis
    forms: tuple             # that basis, as 10-bit forms
    stab_order: int


def subspace_orbits(tree=None) -> list[SubspaceOrbit]:
    """One representative per GL_5-orbit of 4-dimensional spaces of forms.

    The orbit of a subspace is labelled by the least level-4 representative
    among its 840 bases; a representative T is kept iff span(T) attains its
    own index."""
    tree = tree or dual_tree(4)
    L4 = tree.levels[4]
    out = []
    for j, R in enumerate(L4.reps):
        forms = tuple(x + 1 for x in R)
        if _rank(forms) < 4:
            continue
        tree.memoize()
        hits, keep = 0, True
        for B in _bases(forms):
            i, _ = tree.retrieve_index(B)
            if i < j:
                keep = False
                break
            hits += i == j
        tree.memoize(False)
        if keep:
            out.append(SubspaceOrbit(j, forms, hits * L4.stab_order(j)))
    return out


def subspace_stabilizer(sub: SubspaceOrbit, tree=None) -> np.ndarray:
    """All permutations of the 1023 forms preserving span(sub.forms)."""
    tree = tree or dual_tree(4)
    L4 = tree.levels[4]
    st = L4.stabs[sub.index]
    parts = []
    tree.memoize()
    for B in _bases(sub.forms):
        i, g = tree.retrieve_index(B)
        if i == sub.index:
            parts.append(invert(g)[st])
    tree.memoize(False)
    out = np.unique(np.concatenate(parts), axis=0)
    if out.shape[0] != sub.stab_order:
        raise RuntimeError("subspace stabilizer has the wrong size")
    return out


def subspace_orbit_identity(subs) -> tuple[int, int]:
    """(sum |G| / |Stab(W)|, number of 4-dimensional subspaces of F_2^10)."""
    return sum(GL5_ORDER // s.stab_order for s in subs), gaussian_binomial(10, 4)


# ------------------------------------------------------------ field tables


@lru_cache(maxsize=None)
def field_tables(k: int):
    """(log, exp) arrays for F_{2^k}; exp has length 2(q-1) so sums of logs
    need no reduction."""
    F = make_field(k)
    q = F.size
    g = F.generator() if q > 2 else 1
    exp = np.zeros(2 * (q - 1), dtype=np.int64)
    log = np.zeros(q, dtype=np.int64)
    x = 1
    for i in range(q - 1):
        exp[i] = exp[i + q - 1] = x
        log[x] = i
        x = F.mul(x, g)
    return log, exp


@njit
def _fmul(a, b, log, exp):
    if a == 0 or b == 0:
        return 0
    return exp[log[a] + log[b]]


@njit
def _finv(a, log, exp):
    n = log.shape[0] - 1
    return exp[(n - log[a]) % n]


@njit
def _rref(M, nrows, ncols, log, exp, pivots):
    """In-place reduced row echelon form over F_q; returns the rank."""
    r = 0
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if M[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        for j in range(ncols):
            t = M[r, j]
            M[r, j] = M[piv, j]
            M[piv, j] = t
        inv = _finv(M[r, c], log, exp)
        for j in range(ncols):
            M[r, j] = _fmul(M[r, j], inv, log, exp)
        for i in range(nrows):
            if i != r and M[i, c] != 0:
                f = M[i, c]
                for j in range(ncols):
                    M[i, j] ^= _fmul(f, M[r, j], log, exp)
        pivots[r] = c
        r += 1
    return r


# ------------------------------------------------------------ surface points

# the five Plucker quadrics as index triples: sum p[u] p[v] over three pairs
_REL = np.array([[[PAIR_INDEX[s], PAIR_INDEX[t]] for s, t in rel] for rel in plucker_relations()],
                dtype=np.int64)


def form_rows(omega: int) -> np.ndarray:
    """Alternating 5 x 5 matrix of a form as row bitmasks."""
    M = np.zeros(5, dtype=np.int64)
    for idx, (a, b) in enumerate(PLUCKER_PAIRS):
        if omega >> idx & 1:
            M[a] |= 1 << b
            M[b] |= 1 << a
    return M


@njit
def _lines_through(a, Om, k, log, exp, out, n, write):
    """Lines <a, b> of the section through the normalized point a whose
    RREF first row is a; appends packed normalized Plucker vectors."""
    q = 1 << k
    M = np.zeros((4, 5), dtype=np.int64)
    for i in range(4):
        for j in range(5):
            v = 0
            for m in range(5):
                if (Om[i, m] >> j) & 1:
                    v ^= a[m]
            M[i, j] = v
    piv = np.zeros(5, dtype=np.int64)
    r = _rref(M, 4, 5, log, exp, piv)
    # kernel basis from free columns
    isp = np.zeros(5, dtype=np.bool_)
    for i in range(r):
        isp[piv[i]] = True
    d = 5 - r
    K = np.zeros((d, 5), dtype=np.int64)
    t = 0
    for f in range(5):
        if isp[f]:
            continue
        K[t, f] = 1
        for i in range(r):
            K[t, piv[i]] = M[i, f]   # char 2: -x = x
        t += 1
    # drop one kernel vector with a nonzero coefficient in a
    drop = -1
    t = 0
    for f in range(5):
        if isp[f]:
            continue
        if a[f] != 0 and drop < 0:
            drop = t
        t += 1
    m = d - 1
    if m <= 0:
        return n
    C = np.zeros((m, 5), dtype=np.int64)
    t = 0
    for i in range(d):
        if i != drop:
            for j in range(5):
                C[t, j] = K[i, j]
            t += 1
    # projective points of span(C)
    coef = np.zeros(m, dtype=np.int64)
    total = 1
    for i in range(m):
        total *= q
    b = np.zeros(5, dtype=np.int64)
    L = np.zeros((2, 5), dtype=np.int64)
    lp = np.zeros(2, dtype=np.int64)
    for idx in range(1, total):
        x = idx
        lead = -1
        for i in range(m):
            coef[i] = x % q
            x //= q
            if coef[i] != 0:
                lead = i
        if coef[lead] != 1:
            continue
        for j in range(5):
            v = 0
            for i in range(m):
                v ^= _fmul(coef[i], C[i, j], log, exp)
            b[j] = v
        for j in range(5):
            L[0, j] = a[j]
            L[1, j] = b[j]
        _rref(L, 2, 5, log, exp, lp)
        same = True
        for j in range(5):
            if L[0, j] != a[j]:
                same = False
                break
        if not same:
            continue
        if write:
            p = np.zeros(10, dtype=np.int64)
            word = 0
            first = -1
            for i in range(5):
                for j in range(i + 1, 5):
                    # p_ij = a_i b_j + a_j b_i
                    p[_pair_index(i, j)] = (_fmul(L[0, i], L[1, j], log, exp)
                                            ^ _fmul(L[0, j], L[1, i], log, exp))
            for s in range(10):
                if p[s] != 0:
                    first = s
                    break
            inv = _finv(p[first], log, exp)
            for s in range(10):
                word |= _fmul(p[s], inv, log, exp) << (k * s)
            out[n] = word
        n += 1
    return n


@njit
def _pair_index(i, j):
    # lex index of (i, j), i < j, among pairs of range(5)
    return i * 4 - (i * (i + 1)) // 2 + j - 1


@njit
def _surface_scan(Om, k, log, exp, out, write):
    q = 1 << k
    a = np.zeros(5, dtype=np.int64)
    n = 0
    for lead in range(5):
        tail = 4 - lead
        total = 1
        for i in range(tail):
            total *= q
        for idx in range(total):
            for j in range(5):
                a[j] = 0
            a[lead] = 1
            x = idx
            for j in range(lead + 1, 5):
                a[j] = x % q
                x //= q
            n = _lines_through(a, Om, k, log, exp, out, n, write)
    return n


def surface_points(forms, k: int) -> np.ndarray:
    """Packed normalized Plucker vectors (k bits per coordinate) of the
    F_{2^k}-points of Gr(2,5) on which the given forms vanish."""
    if k > 6:
        raise ValueError("packing supports k <= 6")
    Om = np.stack([form_rows(f) for f in forms])
    log, exp = field_tables(k)
    dummy = np.zeros(1, dtype=np.int64)
    n = _surface_scan(Om, k, log, exp, dummy, False)
    out = np.zeros(n, dtype=np.int64)
    _surface_scan(Om, k, log, exp, out, True)
    return np.sort(out)


def unpack_point(word: int, k: int) -> tuple:
    m = (1 << k) - 1
    return tuple((int(word) >> (k * s)) & m for s in range(10))


# ------------------------------------------------------------ tangent spaces


@njit
def _jacobian(p, H, k, log, exp, J):
    """Rows: the hyperplanes H (0/1 vectors) then the gradients of the five
    Plucker quadrics at p."""
    nh = H.shape[0]
    for i in range(nh):
        for s in range(10):
            J[i, s] = H[i, s]
    for r in range(5):
        for s in range(10):
            J[nh + r, s] = 0
        for t in range(3):
            u = _REL[r, t, 0]
            v = _REL[r, t, 1]
            J[nh + r, u] ^= p[v]
            J[nh + r, v] ^= p[u]


@njit
def _tangent_data(words, H, k, log, exp, ranks, tang):
    """Rank of the Jacobian at each point and, at smooth points, two
    tangent directions completing the point to the affine tangent space."""
    m = (1 << k) - 1
    nh = H.shape[0]
    J = np.zeros((nh + 5, 10), dtype=np.int64)
    p = np.zeros(10, dtype=np.int64)
    piv = np.zeros(10, dtype=np.int64)
    for w in range(words.shape[0]):
        for s in range(10):
            p[s] = (words[w] >> (k * s)) & m
        _jacobian(p, H, k, log, exp, J)
        r = _rref(J, nh + 5, 10, log, exp, piv)
        ranks[w] = r
        if r != 7:
            continue
        isp = np.zeros(10, dtype=np.bool_)
        for i in range(r):
            isp[piv[i]] = True
        # kernel basis; keep two vectors that with p span it
        K = np.zeros((3, 10), dtype=np.int64)
        t = 0
        for f in range(10):
            if isp[f]:
                continue
            K[t, f] = 1
            for i in range(r):
                K[t, piv[i]] = J[i, f]
            t += 1
        # drop a kernel vector whose free coordinate is nonzero in p
        drop = -1
        t = 0
        for f in range(10):
            if isp[f]:
                continue
            if p[f] != 0 and drop < 0:
                drop = t
            t += 1
        t = 0
        for i in range(3):
            if i == drop:
                continue
            for s in range(10):
                tang[w, t, s] = K[i, s]
            t += 1


def hyperplane_matrix(forms) -> np.ndarray:
    return np.array([[f >> s & 1 for s in range(10)] for f in forms], dtype=np.int64)


def tangent_data(forms, words, k: int):
    """(Jacobian ranks, tangent directions) at packed points over F_{2^k};
    a point of the section is smooth iff the rank is 7."""
    log, exp = field_tables(k)
    words = np.ascontiguousarray(words, dtype=np.int64)
    ranks = np.zeros(words.size, dtype=np.int64)
    tang = np.zeros((words.size, 2, 10), dtype=np.int64)
    _tangent_data(words, hyperplane_matrix(forms), k, log, exp, ranks, tang)
    return ranks, tang


def grassmannian_points(k: int) -> list[tuple]:
    """F_{2^k}-points of Gr(2,5) in Plucker coordinates, one per reduced
    row echelon 2 x 5 matrix."""
    if k > 6:
        raise ValueError("k <= 6")
    F = make_field(k)
    q = F.size
    out = []
    for c0, c1 in itertools.combinations(range(5), 2):
        free0 = [j for j in range(c0 + 1, 5) if j != c1]
        free1 = list(range(c1 + 1, 5))
        for v0 in itertools.product(range(q), repeat=len(free0)):
            a = [0] * 5
            a[c0] = 1
            for j, x in zip(free0, v0):
                a[j] = x
            for v1 in itertools.product(range(q), repeat=len(free1)):
                b = [0] * 5
                b[c1] = 1
                for j, x in zip(free1, v1):
                    b[j] = x
                out.append(tuple(F.mul(a[i], b[j]) ^ F.mul(a[j], b[i])
                                 for i, j in PLUCKER_PAIRS))
    for p in out:
        if any(plucker_eval(rel, p, F) for rel in plucker_relations()):
            raise RuntimeError("point off the Grassmannian")
    return out


# ------------------------------------------------------------ surface census

# Frobenius acts on the Picard lattice of a quintic del Pezzo through S_5,
# and #S(F_{2^k}) = 4^k + 2^k fix(sigma^k) + 1.
S5_CLASSES = {
    "1^5": (1, 1, 1, 1, 1),
    "2.1^3": (2, 1, 1, 1),
    "2^2.1": (2, 2, 1),
    "3.1^2": (3, 1, 1),
    "3.2": (3, 2),
    "4.1": (4, 1),
    "5": (5,),
}
FILTER_K = 4
MAX_ISOLATED = 4   # a normal quintic del Pezzo has at most 4 singular points


def s5_signature(cycle_type, kmax: int = 6) -> tuple:
    return tuple(sum(c for c in cycle_type if k % c == 0) for k in range(1, kmax + 1))


def count_traces(counts) -> tuple | None:
    """t_k with #S(F_{2^k}) = 4^k + 2^k t_k + 1, or None if not integral."""
    out = []
    for k, c in enumerate(counts, start=1):
        num = c - 4 ** k - 1
        if num % (2 ** k):
            return None
        out.append(num // 2 ** k)
    return tuple(out)


def s5_class(counts) -> str | None:
    t = count_traces(counts)
    for name, ct in S5_CLASSES.items():
        if t == s5_signature(ct, len(counts)):
            return name
    return None


def surface_filter(counts, sing_counts) -> bool:
    """Irreducible surface with isolated singularities: point counts of a
    degree-5 surface (integral traces bounded by the Picard rank) and a
    singular locus whose point counts do not grow with k."""
    t = count_traces(counts)
    if t is None or any(abs(x) > 5 for x in t):
        return False
    return all(s <= MAX_ISOLATED for s in sing_counts)


@dataclass
class DP5Surface:
    index: int
    tree_index: int
    forms: tuple
    stab_order: int
    smooth: bool
    label: str
    counts: tuple
    sing_counts: tuple
    stab_images: list = field(repr=False, default_factory=list)

    def to_dict(self):
        return dict(index=self.index, tree_index=self.tree_index, forms=list(self.forms),
                    stab_order=self.stab_order, smooth=self.smooth, label=self.label,
                    counts=list(self.counts), sing_counts=list(self.sing_counts),
                    stab_images=[list(x) for x in self.stab_images])

    @classmethod
    def from_dict(cls, d):
        return cls(d["index"], d["tree_index"], tuple(d["forms"]), d["stab_order"], d["smooth"],
                   d["label"], tuple(d["counts"]), tuple(d["sing_counts"]),
                   [tuple(x) for x in d["stab_images"]])


def section_counts(forms, kmax: int = FILTER_K):
    counts, sing = [], []
    for k in range(1, kmax + 1):
        w = surface_points(forms, k)
        r, _ = tangent_data(forms, w, k)
        counts.append(int(w.size))
        sing.append(int(np.count_nonzero(r != 7)))
    return tuple(counts), tuple(sing)


def _images_from_perms(perms) -> list[tuple]:
    """Images of the 10 basis forms under each permutation (which determine
    the linear map)."""
    cols = [(1 << a) - 1 for a in range(10)]
    return [tuple(int(x) + 1 for x in p[cols]) for p in perms]


def cache_dir() -> Path:
    d = Path(os.environ.get("G6CENSUS_CACHE", Path.home() / ".cache" / "g6census"))
    d.mkdir(parents=True, exist_ok=True)
    return d


CACHE_VERSION = 1


def _compute_surfaces(tree=None) -> tuple[list, dict]:
    tree = tree or dual_tree(4)
    subs = subspace_orbits(tree)
    total, expected = subspace_orbit_identity(subs)
    if total != expected:
        raise RuntimeError("subspace orbits fail the orbit-counting identity")
    out = []
    for sub in subs:
        counts, sing = section_counts(sub.forms)
        if not surface_filter(counts, sing):
            continue
        smooth = not any(sing)
        label = s5_class(counts)
        if smooth and label is None:
            raise RuntimeError(f"smooth section {sub.forms} matches no S_5 class")
        if not smooth:
            label = "sing" + "".join(str(s) for s in sing)
        perms = subspace_stabilizer(sub, tree)
        out.append(DP5Surface(len(out), sub.index, sub.forms, sub.stab_order, smooth, label,
                              counts, sing, _images_from_perms(perms)))
    meta = dict(subspace_orbits=len(subs), orbit_identity=[total, expected],
                tree_levels=[len(L.reps) for L in tree.levels])
    return out, meta


@lru_cache(maxsize=None)
def surface_census_full():
    path = cache_dir() / "dp5_surfaces.json"
    if path.exists():
        data = json.loads(path.read_text())
        if data.get("version") == CACHE_VERSION:
            return [DP5Surface.from_dict(d) for d in data["surfaces"]], data["meta"]
    surfaces, meta = _compute_surfaces()
    path.write_text(json.dumps(dict(version=CACHE_VERSION, meta=meta,
                                    surfaces=[s.to_dict() for s in surfaces])))
    return surfaces, meta


def surface_census() -> list[DP5Surface]:
    return surface_census_full()[0]


# ------------------------------------------------------------ quadrics

QMONS = [(a, b) for a in range(10) for b in range(a, 10)]
QIDX = {m: i for i, m in enumerate(QMONS)}


def qprod(f: int, g: int) -> int:
    """Product of two linear forms as a 55-bit quadric."""
    out = 0
    for a in range(10):
        if f >> a & 1:
            for b in range(10):
                if g >> b & 1:
                    out ^= 1 << QIDX[(min(a, b), max(a, b))]
    return out


def plucker_quadrics() -> list[int]:
    out = []
    for rel in plucker_relations():
        q = 0
        for s, t in rel:
            q ^= qprod(1 << PAIR_INDEX[s], 1 << PAIR_INDEX[t])
        out.append(q)
    return out


@dataclass
class QuadricSpace:
    linear_rows: dict    # echelon of W * (linear forms)
    rows: dict           # echelon of the full degree-2 ideal
    free21: list         # monomials free modulo W * (linear forms)
    free16: list         # monomials free modulo the full ideal

    @property
    def quotient_dim(self) -> int:
        return len(self.free21)

    def normal(self, q: int) -> int:
        return reduce(q, self.rows)

    def coords(self, q: int) -> int:
        n = self.normal(q)
        return sum(1 << i for i, m in enumerate(self.free16) if n >> m & 1)

    def quadric(self, c: int) -> int:
        return sum(1 << m for i, m in enumerate(self.free16) if c >> i & 1)

    def code21(self, c: int) -> int:
        q = self.quadric(c)
        return sum(1 << i for i, m in enumerate(self.free21) if q >> m & 1)


@lru_cache(maxsize=None)
def quadric_space(forms: tuple) -> QuadricSpace:
    lin = echelon([qprod(w, 1 << j) for w in forms for j in range(10)])
    if len(lin) != 55 - QUOTIENT_DIM:
        raise RuntimeError("W * linear forms has the wrong dimension")
    full = echelon(list(lin.values()) + plucker_quadrics())
    free21 = [m for m in range(55) if m not in lin]
    free16 = [m for m in range(55) if m not in full]
    if len(free16) != REDUCED_DIM:
        raise RuntimeError("Plucker quadrics are dependent modulo W")
    return QuadricSpace(lin, full, free21, free16)


# ------------------------------------------------------------ point tables


def _frob_word(word: int, k: int) -> int:
    F = make_field(k)
    m = (1 << k) - 1
    out = 0
    for s in range(10):
        c = (word >> (k * s)) & m
        out |= F.mul(c, c) << (k * s)
    return out


def closed_surface_points(forms, kmax: int = 6) -> list:
    """(degree, (word, jacobian rank, t1, t2)) per closed point, orbit minima."""
    out = []
    for d in range(1, kmax + 1):
        words = surface_points(forms, d)
        ranks, tang = tangent_data(forms, words, d)
        for i, w in enumerate(words.tolist()):
            orbit = [w]
            x = _frob_word(w, d)
            while x != w:
                orbit.append(x)
                x = _frob_word(x, d)
            if len(orbit) == d and w == min(orbit):
                out.append((d, (w, int(ranks[i]), tuple(tang[i, 0].tolist()),
                                tuple(tang[i, 1].tolist()))))
    return out


@lru_cache(maxsize=None)
def surface_table(index: int) -> PointTable:
    s = surface_census()[index]
    qs = quadric_space(s.forms)
    mons = [QMONS[m] for m in qs.free16]

    def functionals(P, F):
        word, rank, t1, t2 = P
        p = unpack_point(word, F.k)
        vals = [F.mul(p[a], p[b]) for a, b in mons]
        if rank != 7:
            return [vals]
        pol = [[0 if a == b else F.mul(p[a], t[b]) ^ F.mul(p[b], t[a]) for a, b in mons]
               for t in (t1, t2)]
        return [vals] + pol

    return pack_table(closed_surface_points(s.forms), functionals, REDUCED_DIM)


# ------------------------------------------------------------ symmetry


def _apply_images(images, f: int) -> int:
    out = 0
    for a in range(10):
        if f >> a & 1:
            out ^= images[a]
    return out


def _linear_order(images) -> int:
    cur = list(images)
    n = 1
    while cur != [1 << a for a in range(10)]:
        cur = [_apply_images(images, x) for x in cur]
        n += 1
    return n


@lru_cache(maxsize=None)
def surface_group(index: int):
    """Lookup tables of the stabilizer acting on reduced quadric coordinates
    (substitution of each Plucker coordinate by its image), element orders."""
    s = surface_census()[index]
    qs = quadric_space(s.forms)
    W = span_forms(s.forms)
    tabs, orders, seen = [], [], set()
    for img in s.stab_images:
        if sorted(_apply_images(img, w) for w in W) != W:
            raise RuntimeError("stabilizer element does not preserve W")
        cols = []
        for m in qs.free16:
            a, b = QMONS[m]
            cols.append(qs.coords(qprod(img[a], img[b])))
        seen.add(tuple(cols))
        tabs.append(linear_tables(cols))
        orders.append(_linear_order(img))
    if len(seen) != len(s.stab_images):
        raise RuntimeError("stabilizer does not act faithfully on quadrics")
    return np.stack(tabs), np.array(orders)


# ------------------------------------------------------------ sweep


def model_string(surface: int, code21: int) -> str:
    return f"bn:{surface}:{code21:x}"


@dataclass
class SweepStats:
    smooth: int = 0
    reps: int = 0
    inadmissible: int = 0


def bn_sweep(index: int, shard=None, stats: SweepStats | None = None) -> list:
    """Records of the curves on one surface whose canonical quadric lies in
    the shard's Gray-index range."""
    from .common import canonical_reps, stabilizer_fingerprints
    s = surface_census()[index]
    qs = quadric_space(s.forms)
    table = surface_table(index)
    start, stop = index_range(1 << REDUCED_DIM, shard)
    smooth = table.smooth_combos(start, stop)
    tabs, orders = surface_group(index)
    reps, _ = canonical_reps(tabs, smooth)
    counts = table.counts(reps)
    auts = stabilizer_fingerprints(tabs, orders, reps)
    out = []
    bad = 0
    for c, n, (a, name) in zip(reps.tolist(), counts.tolist(), auts):
        try:
            ok = admissible(counts_to_lpoly(n, 2, 6))
        except WeilError:
            ok = False
        if not ok:
            # reducible curves whose components meet only in points of
            # degree >= 7 evade the point search; their counts are not those
            # of a genus-6 curve
            bad += 1
            continue
        out.append(make_record("bn", model_string(index, qs.code21(c)), n, a, name))
    if stats is not None:
        stats.smooth += int(smooth.size)
        stats.reps += int(reps.size)
        stats.inadmissible += bad
    return out


def bn_records(shard=None, stats=None) -> list:
    out = []
    for s in surface_census():
        out.extend(bn_sweep(s.index, shard, stats))
    return out
