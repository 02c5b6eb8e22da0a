"""Orbit lookup trees for k-subsets of a finite G-set.

Group elements are permutations of range(n) stored as integer arrays
(``p[i]`` is the image of i); composition ``a o b`` is ``a[b]``.

Level k holds the orbit representatives R_j of k-subsets together with
their stabilizers (explicit permutation arrays).  For each R_j the points
outside R_j are split into Stab(R_j)-orbits; a pair (j, x) with x the least
point of such an orbit is an *extension label*, naming the (k+1)-subset
R_j + {x}.  Every (k+1)-subset S retrieves to a label through S - {max S},
and each label points at its level-(k+1) representative with a transporter.
The representative of an orbit of (k+1)-subsets is the subset of the least
label reachable from it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np


def compose(a, b):
    """a o b (apply b first)."""
    return a[b]


def invert(p):
    inv = np.empty_like(p)
    inv[p] = np.arange(p.size, dtype=p.dtype)
    return inv


@dataclass
class Level:
    reps: list = field(default_factory=list)       # sorted tuples
    stabs: list = field(default_factory=list)      # arrays (s, n)
    orb_rep: list = field(default_factory=list)    # arrays (n,)
    orb_elems: list = field(default_factory=list)  # arrays (m, n)
    orb_idx: list = field(default_factory=list)    # arrays (n,)
    ext: dict = field(default_factory=dict)        # (j, x) -> (rep index, perm)
    index: dict = field(default_factory=dict)      # rep tuple -> j

    def stab_order(self, j) -> int:
        return int(self.stabs[j].shape[0])


class OrbitTree:
    def __init__(self, n: int, group_order: int, dtype=np.int16):
        self.n = n
        self.group_order = group_order
        self.dtype = dtype
        self.ident = np.arange(n, dtype=dtype)
        self.levels: list[Level] = []
        self._point_stab = None
        self._memo = None

    @property
    def K(self) -> int:
        return len(self.levels) - 1

    # ------------------------------------------------------------ level 0

    def _init_group(self, perms):
        perms = np.ascontiguousarray(perms, dtype=self.dtype)
        L = Level()
        L.reps.append(())
        L.index[()] = 0
        L.stabs.append(perms)
        self._add_orbit_table(L, perms, ())
        self.levels.append(L)

    def _init_points(self, orb_rep, transporters, point_stabs):
        """Level 0 from precomputed point data: orb_rep[y], a transporter
        t_y with t_y(y) = orb_rep[y], and stabilizers of the orbit minima."""
        L = Level()
        L.reps.append(())
        L.index[()] = 0
        L.stabs.append(None)
        L.orb_rep.append(np.asarray(orb_rep))
        L.orb_elems.append(np.ascontiguousarray(transporters, dtype=self.dtype))
        L.orb_idx.append(np.arange(self.n))
        self._point_stab = {int(x): np.ascontiguousarray(s, dtype=self.dtype)
                            for x, s in point_stabs.items()}
        self.levels.append(L)

    def _add_orbit_table(self, L: Level, stab, rep):
        rep_rep = stab.min(axis=0)
        idx = stab.argmin(axis=0)
        L.orb_rep.append(rep_rep)
        L.orb_elems.append(stab)
        L.orb_idx.append(idx)

    def _labels(self, k):
        L = self.levels[k]
        out = []
        for j, R in enumerate(L.reps):
            rs = set(R)
            xs = np.unique(L.orb_rep[j])
            out.extend((j, int(x)) for x in xs if int(x) not in rs)
        return out

    def _label_stab(self, k, j, x):
        L = self.levels[k]
        if L.stabs[j] is None:
            return self._point_stab[x]
        st = L.stabs[j]
        return st[st[:, x] == x]

    # ------------------------------------------------------------ retrieval

    def _label_of(self, k, S):
        """For a (k+1)-subset S: the label (j, x) and a perm g with
        g(S) = R_j + {x} (level-k data), via the largest point of S."""
        S = sorted(S)
        y = S[-1]
        j, g = self._retrieve(k, S[:-1])
        return self._step(k, j, g, y)

    def _step(self, k, j, g, y):
        L = self.levels[k]
        y1 = int(g[y])
        h = L.orb_elems[j][L.orb_idx[j][y1]]
        return (j, int(h[y1])), compose(h, g)

    def _retrieve(self, k, S):
        """(rep index at level k, perm g with g(S) = R)."""
        if k == 0:
            return 0, self.ident
        L = self.levels[k]
        t = tuple(sorted(S))
        j = L.index.get(t)
        if j is not None:
            return j, self.ident
        if self._memo is not None and t in self._memo:
            return self._memo[t]
        label, g = self._label_of(k - 1, t)
        i, tr = self.levels[k - 1].ext[label]
        res = i, compose(tr, g)
        if self._memo is not None:
            self._memo[t] = res
        return res

    def retrieve(self, subset):
        """(representative, transporter) with transporter(subset) = representative."""
        S = sorted(set(int(s) for s in subset))
        if len(S) != len(subset) or (S and not 0 <= S[0] <= S[-1] < self.n):
            raise ValueError("subset out of range")
        k = len(S)
        if k > self.K:
            raise ValueError(f"tree only has levels 0..{self.K}")
        j, g = self._retrieve(k, S)
        return self.levels[k].reps[j], g

    def memoize(self, on: bool = True):
        """Cache retrievals (useful when many queries share prefixes)."""
        self._memo = {} if on else None

    def retrieve_index(self, subset):
        S = sorted(set(int(s) for s in subset))
        j, g = self._retrieve(len(S), S)
        return j, g

    # ------------------------------------------------------------ building

    def _build_next(self, k, keep_tables=True):
        L = self.levels[k]
        N = Level()
        for label in sorted(self._labels(k)):
            if label in L.ext:
                continue
            j, x = label
            T = tuple(sorted(L.reps[j] + (x,)))
            found = []
            for y in T:
                rest = [s for s in T if s != y]
                j1, g1 = self._retrieve(k, rest)
                lab, ky = self._step(k, j1, g1, y)
                found.append((lab, ky))
            best = min(lab for lab, _ in found)
            if best != label:  # pragma: no cover - sorted iteration forbids it
                raise RuntimeError("orbit label order violated")
            i = len(N.reps)
            N.reps.append(T)
            N.index[T] = i
            base = self._label_stab(k, j, x)
            # T is the representative, so k_y^{-1} carries each label's
            # subset back to T; Stab(T) = U_y (Stab(R_j) n Stab(x)) o k_y
            # over the y whose label is the least one
            parts = [compose_rows(base, ky) for lab, ky in found if lab == best]
            N.stabs.append(np.unique(np.concatenate(parts), axis=0))
            for lab, ky in found:
                if lab not in L.ext:
                    L.ext[lab] = (i, invert(ky))
        for i, T in enumerate(N.reps):
            if keep_tables:
                self._add_orbit_table(N, N.stabs[i], T)
        self.levels.append(N)

    def check_counts(self):
        """Orbit-counting identity sum |G|/|Stab(R)| = C(n, k) at every level."""
        out = []
        for k, L in enumerate(self.levels):
            if k == 0:
                continue
            tot = sum(self.group_order // L.stab_order(j) for j in range(len(L.reps)))
            out.append((k, tot, comb(self.n, k)))
        return out


def compose_rows(rows, p):
    """Each row r of rows composed with p: r o p."""
    return rows[:, p]


# ------------------------------------------------------------ constructors


def build_tree(perms, K: int, dtype=np.int16) -> OrbitTree:
    """Orbit tree for an explicitly enumerated permutation group."""
    perms = np.asarray(perms)
    if perms.ndim != 2:
        raise ValueError("perms must be a 2-d array")
    _check_action(perms)
    tree = OrbitTree(perms.shape[1], perms.shape[0], dtype)
    tree._init_group(perms)
    for k in range(K):
        tree._build_next(k)
    return tree


def tree_from_points(n, group_order, orb_rep, transporters, point_stabs, K,
                     dtype=np.int16) -> OrbitTree:
    """Orbit tree when the group is too large to list; level 1 comes from
    point orbit data computed elsewhere."""
    tree = OrbitTree(n, group_order, dtype)
    tree._init_points(orb_rep, transporters, point_stabs)
    for k in range(K):
        tree._build_next(k)
    return tree


def _check_action(perms, samples: int = 32):
    rng = np.random.default_rng(0)
    rows = {p.tobytes() for p in perms}
    n = perms.shape[0]
    if len(rows) != n:
        raise ValueError("repeated group elements")
    for _ in range(min(samples, n * n)):
        a, b = perms[rng.integers(n)], perms[rng.integers(n)]
        if compose(a, b).tobytes() not in rows:
            raise ValueError("permutations are not closed under composition")


# ------------------------------------------------------------ Burnside


def subset_orbit_counts_from_cycles(cycle_counts, group_order, K, weights=None):
    """Burnside: orbits on k-subsets, k <= K, from per-element cycle counts.

    cycle_counts: array (m, K) of (c_1..c_K) per group element (cycles of
    length > K never contribute to subsets of size <= K); weights gives the
    multiplicity of each row when rows are aggregated."""
    totals = [0] * (K + 1)
    cc = np.asarray(cycle_counts, dtype=np.int64)
    if weights is None:
        weights = np.ones(cc.shape[0], dtype=np.int64)
    for row, wt in zip(cc, weights):
        poly = [1] + [0] * K
        for length, c in enumerate(row, start=1):
            for _ in range(int(c)):
                for d in range(K, length - 1, -1):
                    poly[d] += poly[d - length]
        for d in range(K + 1):
            totals[d] += int(wt) * poly[d]
    if any(t % group_order for t in totals):
        raise ValueError("Burnside sum not divisible by the group order")
    return [t // group_order for t in totals]


def burnside_counts(perms, K):
    """Orbits of k-subsets, k = 0..K, for an explicit permutation group."""
    perms = np.asarray(perms)
    rows = []
    for p in perms:
        rows.append(cycle_type(p, K))
    return subset_orbit_counts_from_cycles(rows, perms.shape[0], K)


def cycle_type(p, K):
    seen = np.zeros(p.size, dtype=bool)
    counts = [0] * K
    for i in range(p.size):
        if seen[i]:
            continue
        L, j = 0, i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            L += 1
        if L <= K:
            counts[L - 1] += 1
    return counts


def naive_orbits(perms, k):
    """Partition of all k-subsets into orbits (for small oracles)."""
    from itertools import combinations
    perms = np.asarray(perms)
    n = perms.shape[1]
    seen, orbits = set(), []
    for S in combinations(range(n), k):
        if S in seen:
            continue
        orb = {tuple(sorted(p[list(S)].tolist())) for p in perms}
        seen |= orb
        orbits.append(orb)
    return orbits
