"""Time the compiled and numpy Fokker-Planck right-hand sides.

    python3 benchmarks/bench_fp_kernel.py [--n 256] [--repeat 50] [--full]

``--full`` also times a complete integration to t = 1/gamma with each backend.
"""
import argparse
import time

import numpy as np

from qbm_ohmic import P1, kernels
from qbm_ohmic.oracle import extract_coefficients, fokker_planck_integrate, gaussian_grid, stable_dt
from qbm_ohmic.validation import fp_probe


def time_rhs(rhs, grid, coeffs, repeat):
    W = np.ascontiguousarray(grid.values)
    out = np.empty_like(W)
    args = (grid.q, grid.p, grid.dq, grid.dp, P1.m, coeffs.gamma_coeff, coeffs.omega2, coeffs.d_pp, coeffs.d_qp)
    rhs(W, *args, out)
    best = np.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        rhs(W, *args, out)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--n", type=int, default=256)
    ap.add_argument("--repeat", type=int, default=50)
    ap.add_argument("--full", action="store_true")
    args = ap.parse_args()

    init = fp_probe(P1)
    grid = gaussian_grid(P1, init, 1.0, args.n)
    coeffs = extract_coefficients(0.0, P1, (init.sigma, 2 * init.sigma))
    backends = {"numpy": kernels.python_fp_rhs}
    if kernels.compiled_fp_rhs is not None:
        backends["cython"] = kernels.compiled_fp_rhs
    else:
        print("compiled kernel not built; timing numpy only")

    results = {}
    for name, rhs in backends.items():
        best, out = time_rhs(rhs, grid, coeffs, args.repeat)
        results[name] = out
        print(f"{name:7s} rhs {args.n}x{args.n}: {best * 1e3:8.3f} ms (best of {args.repeat})")
    if len(results) == 2:
        diff = np.max(np.abs(results["numpy"] - results["cython"])) / np.max(np.abs(results["numpy"]))
        print(f"max relative difference between backends: {diff:.2e}")

    if args.full:
        dt = stable_dt(grid, P1, coeffs)
        for name, rhs in backends.items():
            t0 = time.perf_counter()
            traj = fokker_planck_integrate(grid, P1, 1.0 / P1.gamma, dt, rhs=rhs)
            print(f"{name:7s} integration to t=1/gamma: {time.perf_counter() - t0:6.2f} s ({traj.steps} steps)")


if __name__ == "__main__":
    main()
