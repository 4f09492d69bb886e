#!/usr/bin/env python3
"""Benchmark the F_p row-reduction kernels: compiled extension vs pure Python.

Usage: python3 benchmarks/bench_rref.py [--sizes 50,100,200] [--prime 10007]
"""

import argparse
import random
import time

from eigenalg import _fpkernel
from eigenalg.exactla import FP_BACKEND

try:
    from eigenalg import _fpkernel_c
except ImportError:
    _fpkernel_c = None


def bench(fn, rows, cols, p, repeats=3):
    best = None
    for _ in range(repeats):
        work = [list(r) for r in rows]
        t0 = time.perf_counter()
        fn(work, cols, p)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="50,100,200")
    ap.add_argument("--prime", type=int, default=10007)
    ap.add_argument("--seed", type=int, default=20240816)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    p = args.prime
    print(f"active backend in eigenalg.exactla: {FP_BACKEND}")
    print(f"{'size':>6} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for size in (int(s) for s in args.sizes.split(",")):
        rows = [[rng.randrange(p) for _ in range(size)] for _ in range(size)]
        tp = bench(_fpkernel.rref_mod_p, rows, size, p)
        if _fpkernel_c is None:
            print(f"{size:>6} {tp:>10.4f} {'n/a':>13} {'n/a':>8}")
            continue
        tc = bench(_fpkernel_c.rref_mod_p, rows, size, p)
        check_p = _fpkernel.rref_mod_p([list(r) for r in rows], size, p)
        check_c = _fpkernel_c.rref_mod_p([list(r) for r in rows], size, p)
        assert check_p == check_c, "kernels disagree"
        print(f"{size:>6} {tp:>10.4f} {tc:>13.4f} {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
