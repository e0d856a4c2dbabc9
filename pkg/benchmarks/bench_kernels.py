"""Compare the compiled and pure-Python polynomial kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit
from fractions import Fraction

from qtrsk import _pykernels

try:
    from qtrsk import _ckernels
except ImportError:
    _ckernels = None

FACTORS = [(1, 0, 2), (0, 1, 2), (1, 1, 3), (2, 1, 2), (1, 2, 2), (3, 2, 1), (2, 3, 1)]


def workload(k):
    p = k.expand_binomials(FACTORS)
    r = k.expand_binomials([(a + 1, b, e) for a, b, e in FACTORS[:4]])
    prod = k.poly_mul(p, r)
    acc = {}
    for i in range(20):
        k.add_scaled(acc, prod, Fraction(i + 1, 3), i % 3, i % 2)
    return len(acc)


def end_to_end():
    from qtrsk.suites import Options, run_suite

    return run_suite("sum-to-one", Options(max_cells=6)).instances


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    base = None
    for name, k in backends:
        assert workload(k) == workload(_pykernels)
        t = min(timeit.repeat(lambda: workload(k), number=10, repeat=args.repeat)) / 10
        base = base or t
        print(f"kernels  {name:<7} {t * 1e3:8.2f} ms  speedup {base / t:5.2f}x")
    if _ckernels is None:
        print("compiled kernels not built; only the fallback was timed")
    t = min(timeit.repeat(end_to_end, number=1, repeat=1))
    from qtrsk.kernels import BACKEND

    print(f"sum-to-one (6 cells, backend {BACKEND}) {t:.2f} s")


if __name__ == "__main__":
    main()
