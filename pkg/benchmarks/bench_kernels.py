"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--n 10000000] [--repeat 3]

Both backends produce identical streams, so only speed differs.
"""

import argparse
import time

import numpy as np

from dga import _kernels_py as pure

try:
    from dga import _kernels as compiled
except ImportError:
    compiled = None

KEY = 0x1234_5678_9ABC_DEF0


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=10_000_000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    n = args.n
    probs = np.linspace(0.0, 1.0, n)
    bits = (np.arange(n) % 3 == 0).astype(np.uint8)
    cases = {
        "uniform": lambda k: k.uniform(KEY, 0, n),
        "bernoulli": lambda k: k.bernoulli(KEY, 0, probs),
        "salt_and_pepper": lambda k: k.salt_and_pepper(KEY, 0, bits, 0.01),
    }
    print(f"{'kernel':<16} {'python (s)':>11} {'compiled (s)':>13} {'speedup':>8}")
    for name, call in cases.items():
        t_py = best_of(lambda: call(pure), args.repeat)
        if compiled is None:
            print(f"{name:<16} {t_py:>11.3f} {'n/a':>13} {'':>8}")
            continue
        t_c = best_of(lambda: call(compiled), args.repeat)
        print(f"{name:<16} {t_py:>11.3f} {t_c:>13.3f} {t_py / t_c:>7.1f}x")


if __name__ == "__main__":
    main()
