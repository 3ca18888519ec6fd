"""Time the compiled kernels against the numpy/fsum fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import timeit

from coulphase import _pykernels

try:
    from coulphase import _ckernels
except ImportError:
    _ckernels = None

CASES = [
    ("gudermann_sum z=8+3j n=10", "gudermann_sum", (8 + 3j, 10)),
    ("gudermann_sum z=8+3j n=230", "gudermann_sum", (8 + 3j, 230)),
    ("gudermann_sum z=1+50j n=2000", "gudermann_sum", (1 + 50j, 2000)),
    ("atan_excess_sum eta=1 n=200", "atan_excess_sum", (1.0, 200)),
    ("atan_excess_sum eta=100 n=5000", "atan_excess_sum", (100.0, 5000)),
    ("atan_sum eta=1 l=30", "atan_sum", (1.0, 30)),
    ("atan_sum eta=1 l=100000", "atan_sum", (1.0, 100_000)),
]


def best_time(fn, args, repeat):
    timer = timeit.Timer(lambda: fn(*args))
    number, _ = timer.autorange()
    return min(timer.repeat(repeat, number)) / number


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    if _ckernels is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation` first")
    print(f"{'case':<34}{'python (us)':>14}{'cython (us)':>14}{'speedup':>10}")
    for label, name, call_args in CASES:
        py = best_time(getattr(_pykernels, name), call_args, args.repeat) * 1e6
        if _ckernels is None:
            print(f"{label:<34}{py:>14.2f}{'-':>14}{'-':>10}")
            continue
        cy = best_time(getattr(_ckernels, name), call_args, args.repeat) * 1e6
        print(f"{label:<34}{py:>14.2f}{cy:>14.2f}{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()
