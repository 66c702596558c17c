"""Benchmark the compiled kernels against the pure-Python twins.

Each workload feeds identical bitmask inputs to both modules and times
them with perf_counter.  Run from the repository root:

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

import laminarmatroids._kernels_py as pure
from laminarmatroids import (
    direct_sum,
    excluded_minor,
    fano,
    parallel_connection,
    uniform,
)

try:
    import laminarmatroids._kernels as compiled
except ImportError:
    compiled = None


def masks_of(m):
    return list(m._masks), m.n, m.rank()


def workloads():
    host1 = parallel_connection(uniform(3, 6), uniform(3, 6), "e5", "e5")
    host2 = direct_sum(fano(), uniform(2, 4)).truncate()
    em3, em4 = excluded_minor(3), excluded_minor(4)
    u511 = uniform(5, 11)
    u410 = uniform(4, 10)
    chain_sets = [(1 << k) - 1 for k in range(2, 13, 2)]
    chain_caps = [k for k in range(1, 7)]

    c1, n1, r1 = masks_of(host1)
    c2, n2, r2 = masks_of(host2)
    cem3, nem3, rem3 = masks_of(em3)
    cem4, nem4, rem4 = masks_of(em4)
    c511, n511, r511 = masks_of(u511)
    c410, n410, r410 = masks_of(u410)

    relabel = [(i * 7 + 3) % n511 for i in range(n511)]
    shuffled = sorted(
        sum(1 << relabel[i] for i in range(n511) if c >> i & 1) for c in c511
    )

    return [
        (
            "find_minor hit  (n=11 host, rank-3 excluded minor)",
            lambda k: k.find_minor(n1, c1, r1, nem3, cem3, rem3),
        ),
        (
            "find_minor miss (n=11 host, rank-4 excluded minor)",
            lambda k: k.find_minor(n2, c2, r2, nem4, cem4, rem4),
        ),
        (
            "verify_elimination (462 circuits, n=11)",
            lambda k: k.verify_elimination(c511, n511),
        ),
        (
            "cocircuit_masks (uniform rank 4 on 10)",
            lambda k: k.cocircuit_masks(n410, c410, r410),
        ),
        (
            "laminar_circuit_masks (chain family, n=12)",
            lambda k: k.laminar_circuit_masks(12, chain_sets, chain_caps),
        ),
        (
            "cyclic_flat_masks (n=11 connected host)",
            lambda k: k.cyclic_flat_masks(n1, c1),
        ),
        (
            "iso_bijection (relabeled uniform(5,11))",
            lambda k: k.iso_bijection(n511, c511, n511, shuffled),
        ),
    ]


def timed(fn, module, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(module)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3, help="timing repeats")
    args = ap.parse_args()

    if compiled is None:
        print("compiled kernels not built; showing pure-Python timings only")
    header = f"{'workload':<52} {'pure':>9} {'compiled':>9} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, fn in workloads():
        tp, rp = timed(fn, pure, args.repeat)
        if compiled is None:
            print(f"{name:<52} {tp:>8.4f}s {'-':>9} {'-':>8}")
            continue
        tc, rc = timed(fn, compiled, args.repeat)
        same = "ok" if rp == rc else "MISMATCH"
        print(
            f"{name:<52} {tp:>8.4f}s {tc:>8.4f}s {tp / tc:>7.1f}x  {same}"
        )


if __name__ == "__main__":
    main()
