"""Compare the numba and numpy distance-kernel backends.

The measured kernel is the package's hot loop: for every candidate
bitmask, the minimum remapped popcount against a target bitmask array.
Candidate counts mimic mu-model sets, target counts mimic the satisfying
sets of one profile formula.

Run:  python benchmarks/bench_kernels.py [--repeats 5]
"""

import argparse
import time

import numpy as np

from beliefmerge import _kernels

CASES = [
    # (candidates, targets) at a 24-variable universe
    (1 << 12, 256),
    (1 << 14, 512),
    (1 << 16, 1024),
]
BITS = 24


def make_case(seed: int, n_cands: int, n_targets: int):
    rng = np.random.default_rng(seed)
    cands = rng.integers(0, 1 << BITS, n_cands).astype(np.int64)
    targets = rng.integers(0, 1 << BITS, n_targets).astype(np.int64)
    table = np.arange(BITS + 1, dtype=np.int64)
    return cands, targets, table


def best_of(fn, args, repeats: int) -> float:
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - start)
    return min(times)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    if _kernels._min_mapped_numba is None:
        print("numba is not importable; only the numpy fallback can run")
        return 1

    warm = make_case(0, 64, 64)
    start = time.perf_counter()
    _kernels._min_mapped_numba(*warm)
    compile_s = time.perf_counter() - start
    print(f"numba warm-up (compile + first call): {compile_s * 1000:.1f} ms")
    print()
    print(f"{'candidates':>12} {'targets':>8} {'numpy ms':>10} {'numba ms':>10} {'speedup':>8}")

    for seed, (n_cands, n_targets) in enumerate(CASES, start=1):
        case = make_case(seed, n_cands, n_targets)
        expected = _kernels._min_mapped_numpy(*case)
        got = _kernels._min_mapped_numba(*case)
        if not np.array_equal(expected, got):
            print("BACKEND MISMATCH - aborting")
            return 1
        t_numpy = best_of(_kernels._min_mapped_numpy, case, args.repeats)
        t_numba = best_of(_kernels._min_mapped_numba, case, args.repeats)
        print(
            f"{n_cands:>12} {n_targets:>8} {t_numpy * 1000:>10.2f} "
            f"{t_numba * 1000:>10.2f} {t_numpy / t_numba:>7.1f}x"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
