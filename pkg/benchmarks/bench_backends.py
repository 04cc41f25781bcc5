"""Benchmark the compiled window kernels against the pure-Python fallback.

Runs the hot kernels over a deterministic workload (the full rank-4 group
plus sampled rank-6 windows) and prints a table with per-op timings and
the speedup.  Usage: python benchmarks/bench_backends.py [--n N]
"""

from __future__ import annotations

import argparse
import random
import time

from zipcone import _kernels_py
from zipcone.weylroot import weyl_elements

try:
    from zipcone import _ckernels
except ImportError:
    _ckernels = None


def build_workload(n: int, sample: int, seed: int = 12345):
    if n <= 4:
        windows = [w.window for w in weyl_elements(n)]
    else:
        rng = random.Random(seed)
        windows = []
        m = 2 * n
        for _ in range(sample):
            perm = list(range(1, n + 1))
            rng.shuffle(perm)
            first = tuple(x if rng.random() < 0.5 else m + 1 - x for x in perm)
            windows.append(first + tuple(m + 1 - x for x in reversed(first)))
    rng = random.Random(seed + 1)
    pairs = [
        (windows[rng.randrange(len(windows))], windows[rng.randrange(len(windows))])
        for _ in range(20000)
    ]
    return windows, pairs


def time_op(fn):
    t0 = time.perf_counter()
    out = fn()
    return time.perf_counter() - t0, out


def run_backend(mod, windows, pairs):
    times = {}
    checks = {}
    times["length"], checks["length"] = time_op(
        lambda: sum(mod.length(w) for w in windows)
    )
    times["compose"], checks["compose"] = time_op(
        lambda: sum(mod.compose(u, v)[0] for u, v in pairs)
    )
    times["bruhat_leq"], checks["bruhat_leq"] = time_op(
        lambda: sum(1 for u, v in pairs if mod.bruhat_leq(u, v))
    )
    times["admissible"], checks["admissible"] = time_op(
        lambda: sum(len(mod.admissible_pairs(w)) for w in windows)
    )
    return times, checks


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=4)
    parser.add_argument("--sample", type=int, default=2000)
    args = parser.parse_args()

    windows, pairs = build_workload(args.n, args.sample)
    print(f"workload: {len(windows)} windows (rank {args.n}), {len(pairs)} pairs")

    py_times, py_checks = run_backend(_kernels_py, windows, pairs)
    if _ckernels is None:
        print("compiled backend not available; pure-Python timings only")
        for op, t in py_times.items():
            print(f"{op:>12}: {t * 1000:8.1f} ms")
        return 0

    c_times, c_checks = run_backend(_ckernels, windows, pairs)
    if c_checks != py_checks:
        print("BACKEND MISMATCH:", py_checks, c_checks)
        return 1

    print(f"{'op':>12} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for op in py_times:
        pt, ct = py_times[op], c_times[op]
        print(f"{op:>12} {pt * 1000:8.1f}ms {ct * 1000:8.1f}ms {pt / ct:7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
