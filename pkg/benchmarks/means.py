"""
Benchmark mean kernels: pure Python (_kernels) vs Cython (kernels).
Compares time per call and peak memory (tracemalloc) per run.

Run from repo root:

  PYTHONPATH=src python benchmarks/means.py

Or after pip install -e .:

  python benchmarks/means.py
"""

from __future__ import annotations

import os
import sys
import time
import tracemalloc

_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
_src = os.path.join(_root, "src")
if _src not in sys.path:
    sys.path.insert(0, _src)

from picog3m.means import _kernels as py
from picog3m.means import kernels as cy

# (label, x, w, p); p < 1e-3 takes the log-domain path
SAMPLES = [
    ("n=2 p=0.5", (1.0, 9.0), (0.5, 0.5), 0.5),
    ("n=2 p=1e-4", (4.0, 9.0), (0.5, 0.5), 1e-4),
    ("n=8 p=0.3", tuple(float(k) for k in range(1, 9)), (0.125,) * 8, 0.3),
    ("n=64 p=-2", tuple(1.0 + k / 8 for k in range(64)), (1.0 / 64,) * 64, -2.0),
]

N_TIME = 20000
N_MEM = 5000


def _time_per_call(fn, args: tuple, n: int = N_TIME, warmup: int = 100) -> float:
    for _ in range(warmup):
        fn(*args)
    start = time.perf_counter()
    for _ in range(n):
        fn(*args)
    return (time.perf_counter() - start) / n


def _peak_memory_kb(fn, args: tuple, n: int = N_MEM) -> float:
    """Peak traced memory (KiB) during n calls."""
    tracemalloc.start()
    if hasattr(tracemalloc, "reset_peak"):
        tracemalloc.reset_peak()
    for _ in range(n):
        fn(*args)
    _, peak = tracemalloc.get_traced_memory()
    tracemalloc.stop()
    return peak / 1024.0


def main() -> None:
    print("Benchmark: power_mean  pure Python vs Cython")
    print("  (_kernels.power_mean vs kernels.power_mean)")
    print()

    for label, x, w, p in SAMPLES:
        a, b = py.power_mean(x, w, p), cy.power_mean(x, w, p)
        assert abs(a - b) <= 1e-15 * abs(a), f"{label}: {a!r} vs {b!r}"
    print("  Sanity check: kernels agree on every sample")
    print()

    print("  --- Time per call (us) ---")
    print(f"  {'sample':<14} {'Python (us)':<14} {'Cython (us)':<14} {'speedup':<10}")
    print("  " + "-" * 52)
    speedups = []
    for label, x, w, p in SAMPLES:
        t_py = _time_per_call(py.power_mean, (x, w, p)) * 1e6
        t_cy = _time_per_call(cy.power_mean, (x, w, p)) * 1e6
        speedup = t_py / t_cy if t_cy > 0 else 0
        speedups.append(speedup)
        print(f"  {label:<14} {t_py:<14.3f} {t_cy:<14.3f} {speedup:.2f}x")
    print()

    print("  --- Peak memory (KiB) during run ---")
    print(f"  {'sample':<14} {'Python (KiB)':<14} {'Cython (KiB)':<14}")
    print("  " + "-" * 42)
    for label, x, w, p in SAMPLES:
        mem_py = _peak_memory_kb(py.power_mean, (x, w, p))
        mem_cy = _peak_memory_kb(cy.power_mean, (x, w, p))
        print(f"  {label:<14} {mem_py:<14.2f} {mem_cy:<14.2f}")
    print()

    print("  --- Summary ---")
    print(f"  Average time speedup (Cython vs Python): {sum(speedups) / len(speedups):.2f}x")
    print()


if __name__ == "__main__":
    main()
