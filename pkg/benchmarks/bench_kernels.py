"""Time the compiled search loops against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Both backends run the same scans and must agree on every count and hit.
"""
import argparse
import time

import numpy as np

from dvl import kernels
from dvl.search import HIT_CAPACITY, brute_matrix, kernel_form

CASES = [
    ("brute", 20, "pm1_full"),
    ("brute", 22, "erdos"),
    ("kernel", 36, "pm1_full"),
]


def run_case(backend, kind, period, family):
    mod = kernels.get_backend(backend)
    hits = np.zeros(HIT_CAPACITY, dtype=np.int64)
    if kind == "brute":
        A = brute_matrix(period, family)
        bits = period - 1 if family == "erdos" else period
        counts = mod.brute_scan(A, 0, 1 << bits, bits, True, False, hits)
        return counts, hits[: counts[2]].tolist()
    form = kernel_form(period, family)
    n = mod.kernel_scan(form.B, form.L, 0, 1 << len(form.free), len(form.free), hits)
    return (n,), hits[:n].tolist()


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = ["python"]
    try:
        kernels.get_backend("cython")
        backends.insert(0, "cython")
    except ImportError:
        print("compiled kernels not built; timing the fallback only")
    print(f"{'case':<22}{'backend':<9}{'best s':>10}{'speedup':>10}")
    for kind, period, family in CASES:
        best, outputs = {}, {}
        for b in backends:
            times = []
            for _ in range(args.repeat):
                t = time.perf_counter()
                outputs[b] = run_case(b, kind, period, family)
                times.append(time.perf_counter() - t)
            best[b] = min(times)
        if len(set(map(repr, outputs.values()))) != 1:
            raise SystemExit(f"backends disagree on {kind} {period} {family}")
        for b in backends:
            speed = best["python"] / best[b]
            print(f"{kind + ' ' + str(period) + ' ' + family:<22}{b:<9}{best[b]:>10.3f}{speed:>9.1f}x")


if __name__ == "__main__":
    main()
