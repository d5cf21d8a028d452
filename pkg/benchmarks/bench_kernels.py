#!/usr/bin/env python3
"""Benchmark the compiled Horner kernel against the numpy fallback.

Times batch evaluation of a degree-N complex series on M circle points, the
shape every criterion scan and radius bisection in the package reduces to.

    python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from harmap._kernels import _horner_py

try:
    from harmap._kernels import _horner_c
except ImportError:
    _horner_c = None


def bench(fn, coeffs, z, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(coeffs, z)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    rng = np.random.default_rng(0)
    print(f"{'degree':>7} {'points':>8} {'numpy (us)':>12} {'compiled (us)':>14} {'speedup':>8}")
    for degree in (4, 16, 64, 256):
        for m in (64, 1024, 4096, 65536):
            coeffs = np.ascontiguousarray(rng.normal(size=degree + 1) + 1j * rng.normal(size=degree + 1))
            z = np.ascontiguousarray(
                0.9 * np.exp(2j * np.pi * np.arange(m) / m)
            )
            repeats = max(3, min(200, 200000 // (degree * m // 64 + 1)))
            t_py = bench(_horner_py.polyval_many, coeffs, z, repeats)
            if _horner_c is None:
                print(f"{degree:>7} {m:>8} {t_py*1e6:>12.1f} {'n/a':>14} {'n/a':>8}")
                continue
            t_c = bench(_horner_c.polyval_many, coeffs, z, repeats)
            same = np.allclose(
                _horner_py.polyval_many(coeffs, z),
                _horner_c.polyval_many(coeffs, z),
                rtol=1e-13,
                atol=1e-300,
            )
            flag = "" if same else "  RESULTS DIFFER"
            print(
                f"{degree:>7} {m:>8} {t_py*1e6:>12.1f} {t_c*1e6:>14.1f} {t_py/t_c:>8.2f}{flag}"
            )
    if _horner_c is None:
        print("\ncompiled kernel not built; run: pip install -e . --no-build-isolation")


if __name__ == "__main__":
    main()
