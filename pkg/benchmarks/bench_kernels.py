"""Compare the numba and numpy backends on the hot kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Each kernel runs on the same inputs with both backends; outputs are checked
for equality and wall times printed (numba timings exclude the first,
compiling call).
"""

import argparse
import time

import numpy as np

from g6census import kernels
from g6census.gl5 import fixed_counts, gl5_elements
from g6census.strata.quintic import group_tables, quintic_table


def _time(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def _same(a, b):
    if isinstance(a, tuple):
        return all(_same(x, y) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    T = quintic_table()
    tabs, _ = group_tables()
    lo, hi = 0, 1 << 17
    smooth = T.smooth_combos(0, 1 << 19)
    vecs = smooth[:4000]
    sample = np.random.default_rng(0).choice(gl5_elements(), 20000)

    cases = {
        "smooth scan (2^17 quintics)":
            lambda b: kernels.smooth_combinations(T.B, T.W0, T.smask, lo, hi, backend=b),
        "point counts (4000 quintics)":
            lambda b: kernels.point_counts(T.B, T.W0, T.vmask, T.pdeg, vecs, 6, backend=b),
        "orbit minima (4000 x 168)":
            lambda b: kernels.orbit_minima(tabs, vecs, backend=b),
        "GL_5 fixed counts (20000)":
            lambda b: fixed_counts(sample, 4, backend=b),
    }
    print(f"{'kernel':<32}{'numba s':>10}{'numpy s':>10}{'speedup':>9}  equal")
    for name, fn in cases.items():
        fn("numba")  # compile
        tn, a = _time(lambda: fn("numba"), args.repeat)
        tp, b = _time(lambda: fn("numpy"), args.repeat)
        print(f"{name:<32}{tn:>10.4f}{tp:>10.4f}{tp / tn:>9.1f}  {_same(a, b)}")


if __name__ == "__main__":
    main()
