"""Timings of the compiled kernels against the NumPy fallback.

Run with:  python benchmarks/bench_kernels.py [--repeat 3]

Workload sizes are deliberately larger than the test fixtures so the
inner loops dominate; at corpus scale both backends finish instantly.
"""

import argparse
import time

import numpy as np

from flexirank.kernels import pybackend

try:
    from flexirank.kernels import _native as native
except ImportError:
    native = None


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def hits_workload():
    rng = np.random.default_rng(0)
    n = 3000
    m = 40000
    src = rng.integers(0, n, size=m).astype(np.intp)
    dst = rng.integers(0, n, size=m).astype(np.intp)
    keep = src != dst
    src, dst = src[keep], dst[keep]
    return lambda backend: backend.hits_kernel(n, src, dst, 1e-12, 150)


def fcm_workload():
    rng = np.random.default_rng(1)
    X = rng.uniform(0, 1, size=(4000, 7))
    U0 = rng.uniform(size=(4000, 6))
    U0 /= U0.sum(axis=1, keepdims=True)
    return lambda backend: backend.fcm_kernel(X, U0, 2.0, 0.0, 40)


def mlp_workload():
    rng = np.random.default_rng(2)
    X = rng.uniform(0, 1, size=(300, 7))
    T = np.eye(4)[rng.integers(0, 4, size=300)].astype(float)

    def run(backend):
        r = np.random.default_rng(3)
        W1 = r.uniform(-0.5, 0.5, size=(5, 7))
        b1 = r.uniform(-0.5, 0.5, size=5)
        W2 = r.uniform(-0.5, 0.5, size=(4, 5))
        b2 = r.uniform(-0.5, 0.5, size=4)
        backend.mlp_kernel(X, T, W1, b1, W2, b2, 200, 0.5)

    return run


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    workloads = [
        ("hits  (3k nodes, 40k edges, 150 iters)", hits_workload()),
        ("fcm   (4000x7, c=6, 40 iters)", fcm_workload()),
        ("mlp   (300x7, 5 hidden, 200 epochs)", mlp_workload()),
    ]

    print(f"{'kernel':40} {'numpy':>10} {'native':>10} {'speedup':>9}")
    for name, work in workloads:
        t_py = timed(lambda: work(pybackend), args.repeat)
        if native is None:
            print(f"{name:40} {t_py:9.3f}s {'n/a':>10} {'n/a':>9}")
            continue
        t_native = timed(lambda: work(native), args.repeat)
        print(f"{name:40} {t_py:9.3f}s {t_native:9.3f}s {t_py / t_native:8.1f}x")
    if native is None:
        print("\ncompiled kernels not built; reinstall with a C compiler available")


if __name__ == "__main__":
    main()
