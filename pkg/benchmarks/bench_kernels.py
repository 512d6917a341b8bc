"""Timing comparison: compiled kernels vs the pure-Python fallbacks.

Run as a script from anywhere after installing the package:

    python benchmarks/bench_kernels.py

Each workload runs on both backends (when the compiled extension is
available) and reports best-of-three wall times plus the speedup.  Results
are asserted equal across backends before timings are trusted.
"""

from __future__ import annotations

import time

from hcpoly import _pykernels

try:
    from hcpoly import _speedups
except ImportError:  # built without the extension
    _speedups = None


def _divisor_scan(impl, max_degree: int) -> int:
    total = 0
    for f in range(1 << max_degree, 2 << max_degree):
        total += impl.divisor_count_gf2(f)
    return total


WORKLOADS = [
    ("divisor counts, all monic degree-12", lambda impl: _divisor_scan(impl, 12)),
    ("exhaustive maximum at degree 14", lambda impl: impl.max_tau_gf2(14)),
    ("pairwise order scan, 50 x 50 grid", lambda impl: impl.find_order_tie(50)),
]


def _best_of(fn, impl, repeat: int = 3) -> tuple[float, object]:
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(impl)
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> None:
    if _speedups is None:
        print("compiled extension not built; timing the pure backend only")
    header = f"{'workload':<40} {'python':>10} {'compiled':>10} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for label, fn in WORKLOADS:
        py_time, py_result = _best_of(fn, _pykernels)
        if _speedups is None:
            print(f"{label:<40} {py_time:>9.3f}s {'-':>10} {'-':>9}")
            continue
        c_time, c_result = _best_of(fn, _speedups)
        assert py_result == c_result, f"backend mismatch on {label!r}"
        print(f"{label:<40} {py_time:>9.3f}s {c_time:>9.3f}s {py_time / c_time:>8.1f}x")


if __name__ == "__main__":
    main()
