"""Numba kernels vs their numpy twins on tick-sized inputs.

Run: python3 benchmarks/bench_kernels.py [--n 2000000] [--runs 5]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from tickdist import kernels
from tickdist._accel import HAS_NUMBA
from tickdist.tickdata import CS_PER_MINUTE, SESSION_SLOTS, SZSE_2003


def _fixture(n: int, seed: int = 7):
    rng = np.random.default_rng(seed)
    days = 20030102 + np.sort(rng.integers(0, 20, n))
    starts, ends = SZSE_2003.starts, SZSE_2003.ends
    sess = rng.integers(0, 2, n)
    times = starts[sess] + rng.integers(0, ends[0] - starts[0] + 1, n)
    key = days * SESSION_SLOTS * 10_000_000 + sess * 10_000_000 + times
    order = np.argsort(key, kind="stable")
    days, sess, times = days[order], sess[order], times[order]
    seg = days * SESSION_SLOTS + sess
    logp = np.cumsum(rng.standard_t(3, n) * 1e-3)
    gseg, gtime = [], []
    for d in np.unique(days):
        for s, (a, b) in enumerate(SZSE_2003.continuous_sessions):
            marks = np.arange(a, b + 1, CS_PER_MINUTE)
            gseg.append(np.full(marks.shape[0], d * SESSION_SLOTS + s))
            gtime.append(marks)
    return times, seg, logp, np.concatenate(gseg), np.concatenate(gtime)


def _time(fn, runs):
    best = np.inf
    for _ in range(runs):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=2_000_000)
    ap.add_argument("--runs", type=int, default=5)
    args = ap.parse_args(argv)
    if not HAS_NUMBA:
        print("numba unavailable (or TICKDIST_DISABLE_JIT set); nothing to compare")
        return
    times, seg, logp, gseg, gtime = _fixture(args.n)
    cases = {
        "label_sessions": lambda b: kernels.label_sessions(times, SZSE_2003.starts, SZSE_2003.ends, backend=b),
        "lagged_segment_diff(8)": lambda b: kernels.lagged_segment_diff(logp, seg, 8, backend=b),
        "previous_tick_index": lambda b: kernels.previous_tick_index(seg, times, gseg, gtime, backend=b),
        "central_moments": lambda b: kernels.central_moments(logp, backend=b),
    }
    print(f"n = {args.n:,} ticks, best of {args.runs}")
    print(f"{'kernel':<24}{'numba ms':>10}{'numpy ms':>10}{'speedup':>9}")
    for name, fn in cases.items():
        fn("numba")  # compile
        t_nb = _time(lambda: fn("numba"), args.runs)
        t_np = _time(lambda: fn("numpy"), args.runs)
        print(f"{name:<24}{t_nb * 1e3:>10.2f}{t_np * 1e3:>10.2f}{t_np / t_nb:>8.1f}x")


if __name__ == "__main__":
    main()
