#!/usr/bin/env python3
"""Benchmark the compiled summation kernel against the pure-Python twin.

The workloads mirror what evaluation actually feeds the kernel: short
digit streams with a periodic tail (the verify-suite hot path), long
finite prefixes, and column-system streams with non-trivial rational
weights.

Usage: python benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import random
import time

from cantorshift._kernel import _pykernel

try:
    from cantorshift._kernel import _ckernel
except ImportError:
    _ckernel = None


def cantor_workload(rng, positions, max_q=12):
    bases = [rng.randrange(2, max_q + 1) for _ in range(positions)]
    digits = [rng.randrange(0, q) for q in bases]
    sign = [rng.choice((-1, 1)) for _ in range(positions)]
    return digits, bases, [1] * positions, bases, sign


def column_workload(rng, positions, max_den=16):
    t_num, t_den, w_num, w_den, sign = [], [], [], [], []
    for _ in range(positions):
        den = rng.randrange(4, max_den + 1)
        cut = rng.randrange(1, den)
        t_num.append(rng.randrange(0, cut + 1))
        t_den.append(den)
        w_num.append(den - cut)
        w_den.append(den)
        sign.append(rng.choice((-1, 1)))
    return t_num, t_den, w_num, w_den, sign


def build_cases(seed):
    rng = random.Random(seed)
    return [
        ("short cantor + tail", [(cantor_workload(rng, 20), 16) for _ in range(400)]),
        ("short column + tail", [(column_workload(rng, 20), 16) for _ in range(400)]),
        ("deep cantor prefix", [(cantor_workload(rng, 1500), 1500) for _ in range(4)]),
        ("deep column prefix", [(column_workload(rng, 800), 800) for _ in range(4)]),
    ]


def time_backend(kernel, batch, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for work, split in batch:
            kernel.periodic_sum(*work, split)
        best = min(best, time.perf_counter() - start)
    return best / len(batch)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    cases = build_cases(args.seed)
    print(f"{'workload':<24}{'pure (us/call)':>16}{'compiled (us/call)':>20}{'speedup':>10}")
    for name, batch in cases:
        pure = time_backend(_pykernel, batch, args.repeat) * 1e6
        if _ckernel is None:
            print(f"{name:<24}{pure:>16.2f}{'not built':>20}{'-':>10}")
            continue
        # agreement check on the first case of each batch
        work, split = batch[0]
        assert _ckernel.periodic_sum(*work, split) == _pykernel.periodic_sum(*work, split)
        comp = time_backend(_ckernel, batch, args.repeat) * 1e6
        print(f"{name:<24}{pure:>16.2f}{comp:>20.2f}{pure / comp:>10.2f}x")
    if _ckernel is None:
        print("\ncompiled kernel unavailable; install with Cython to compare")


if __name__ == "__main__":
    main()
