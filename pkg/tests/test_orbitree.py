import itertools
from math import comb

import numpy as np
import pytest

from g6census.orbitree import (build_tree, burnside_counts, compose, invert, naive_orbits)


def _s4_on_pairs():
    # S_4 acting on the 6 edges of K_4
    edges = list(itertools.combinations(range(4), 2))
    idx = {e: i for i, e in enumerate(edges)}
    perms = []
    for s in itertools.permutations(range(4)):
        perms.append([idx[tuple(sorted((s[a], s[b])))] for a, b in edges])
    return np.array(perms, dtype=np.int16)


def _dihedral(n):
    rot = [(i + 1) % n for i in range(n)]
    ref = [(-i) % n for i in range(n)]
    out = {tuple(range(n))}
    frontier = [tuple(range(n))]
    while frontier:
        p = frontier.pop()
        for g in (rot, ref):
            q = tuple(g[i] for i in p)
            if q not in out:
                out.add(q)
                frontier.append(q)
    return np.array(sorted(out), dtype=np.int16)


@pytest.mark.parametrize("perms", [_s4_on_pairs(), _dihedral(9)])
def test_tree_matches_naive_and_burnside(perms):
    K = 4
    tree = build_tree(perms, K)
    bc = burnside_counts(perms, K)
    for k in range(K + 1):
        assert len(tree.levels[k].reps) == bc[k] == len(naive_orbits(perms, k))
    for k, tot, expect in tree.check_counts():
        assert tot == expect == comb(perms.shape[1], k)


def test_retrieve_sends_subset_to_rep():
    perms = _dihedral(9)
    tree = build_tree(perms, 3)
    for S in itertools.combinations(range(9), 3):
        rep, g = tree.retrieve(S)
        g = np.asarray(g)
        assert tuple(sorted(g[list(S)].tolist())) == rep


def test_compose_invert():
    rng = np.random.default_rng(0)
    p = rng.permutation(10).astype(np.int16)
    assert (compose(p, invert(p)) == np.arange(10)).all()


def test_build_tree_rejects_non_group():
    with pytest.raises(ValueError):
        build_tree(np.array([[0, 1, 2], [1, 2, 0]], dtype=np.int16), 1)
