"""Benchmark the compiled kernels against the pure-Python fallback.

Usage: python benchmarks/compare_backends.py [--quick]
"""

from __future__ import annotations

import argparse
import math
import time

from abeliancft import _kernels
from abeliancft._kernels import _ref
from abeliancft.quadratic import is_fundamental_discriminant

try:
    from abeliancft._kernels import _fast
except ImportError:
    _fast = None


def fundamentals(lo: int, hi: int) -> list[int]:
    return [D for D in range(lo, hi) if is_fundamental_discriminant(D)]


def time_call(fn, args_list) -> float:
    start = time.perf_counter()
    for args in args_list:
        fn(*args)
    return time.perf_counter() - start


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="smaller ranges")
    opts = parser.parse_args()

    scale = 10 if opts.quick else 1
    imag = [(D,) for D in fundamentals(-40000 // scale, -2)]
    dirich = [(D,) for D in fundamentals(-20000 // scale, -4)]
    real = [(D,) for D in fundamentals(5, 20000 // scale)]
    pell = [(d,) for d in range(2, 20000 // scale) if math.isqrt(d) ** 2 != d]

    workloads = [
        ("imaginary form count", "imaginary_class_number", imag),
        ("Dirichlet character sum", "imaginary_dirichlet_class_number", dirich),
        ("real form cycles", "real_narrow_class_number", real),
        ("Pell CF period", "pell_norm_and_period", pell),
    ]

    print(f"active backend: {_kernels.backend()}")
    header = f"{'workload':28} {'n':>6} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, name, args_list in workloads:
        pure_time = time_call(getattr(_ref, name), args_list)
        if _fast is None:
            print(f"{label:28} {len(args_list):>6} {pure_time:>10.3f} {'n/a':>13} {'n/a':>8}")
            continue
        fast_time = time_call(getattr(_fast, name), args_list)
        speedup = pure_time / fast_time if fast_time > 0 else float("inf")
        print(
            f"{label:28} {len(args_list):>6} {pure_time:>10.3f} "
            f"{fast_time:>13.3f} {speedup:>7.1f}x"
        )


if __name__ == "__main__":
    main()
