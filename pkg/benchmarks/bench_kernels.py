"""Compare the numba and numpy backends of the sweep kernels.

    python benchmarks/bench_kernels.py [--grid N] [--bound B] [--repeat R]
"""
import argparse
import time

import numpy as np

from seifnet import _kernels
from seifnet.classify import closed_form_indices, knm_hyperbolic


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def exclusion_sweep(span, bound, use_numba):
    for m in range(-span, span + 1):
        for n in range(-span, span + 1):
            if knm_hyperbolic(m, n):
                d = m + 1 + n * (m + 1) ** 2
                _kernels.torus_witness(closed_form_indices(m, n), [d - 1, d - 2, d - 3],
                                       bound, use_numba)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--grid", type=int, default=1000, help="half-width of the (m, n) grid")
    ap.add_argument("--span", type=int, default=8, help="half-width of the exclusion sweep")
    ap.add_argument("--bound", type=int, default=100)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = [False] + ([True] if _kernels.HAS_NUMBA else [])
    r = np.arange(-args.grid, args.grid + 1)
    if _kernels.HAS_NUMBA:
        # compile outside the timed region
        _kernels.knm_index_grid(r[:2], r[:2], use_numba=True)
        _kernels.torus_witness([(2, 3, 5)] * 3, [1, 2, 3], 5, use_numba=True)

    print(f"{'kernel':<34}{'backend':<8}{'seconds':>10}")
    results = {}
    for use in backends:
        name = "numba" if use else "numpy"
        t = best_of(lambda: _kernels.knm_index_grid(r, r, use_numba=use), args.repeat)
        results[("grid", name)] = t
        print(f"{f'index grid {r.size}x{r.size}':<34}{name:<8}{t:>10.4f}")
    for use in backends:
        name = "numba" if use else "numpy"
        t = best_of(lambda: exclusion_sweep(args.span, args.bound, use), args.repeat)
        results[("excl", name)] = t
        label = f"torus exclusion [-{args.span},{args.span}]^2"
        print(f"{label:<34}{name:<8}{t:>10.4f}")
    if _kernels.HAS_NUMBA:
        for k in ("grid", "excl"):
            print(f"speedup {k}: {results[(k, 'numpy')] / results[(k, 'numba')]:.1f}x")
        g1 = _kernels.knm_index_grid(r, r, use_numba=True)
        g2 = _kernels.knm_index_grid(r, r, use_numba=False)
        assert np.array_equal(g1, g2), "backends disagree"


if __name__ == "__main__":
    main()
