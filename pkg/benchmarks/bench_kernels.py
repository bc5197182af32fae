"""Compare the numba and numpy kernel paths.

    python3 benchmarks/bench_kernels.py [--repeat 200] [--assembly 16]

Kernel timings call both implementations in-process; the assembly timing
runs a full sine-channel solve in subprocesses with and without
CURVEDVEM_DISABLE_NUMBA=1.
"""
import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from curvedvem import _kernels as K

ASSEMBLY_SNIPPET = """
import time
from curvedvem.meshgen import sine_channel_mesh
from curvedvem.assembly import assemble, solve
from curvedvem.problems import sine_channel_solution
m = sine_channel_mesh('quad', {n}, 3)
ex = sine_channel_solution()
assemble(sine_channel_mesh('quad', 2, 3), 3, ex.f)   # warm-up (jit compile / cache load)
t = time.perf_counter()
s = assemble(m, 3, ex.f)
solve(s)
print(time.perf_counter() - t)
"""


def bench_kernels(repeat):
    rng = np.random.default_rng(0)
    rows = []
    for npts, degree in ((40, 3), (200, 6), (2000, 8)):
        x, y, w = rng.random(npts), rng.random(npts), rng.random(npts)
        exps = K.monomial_exponents(degree)
        assert np.allclose(K.monomial_values_numpy(x, y, exps), K.monomial_values_numba(x, y, exps))
        assert np.allclose(K.boundary_moments_numpy(x, y, w, 0.5, 0.5, 0.7, exps),
                           K.boundary_moments_numba(x, y, w, 0.5, 0.5, 0.7, exps))
        for name in ("monomial_values", "boundary_moments"):
            if name == "monomial_values":
                calls = {p: (lambda f=getattr(K, f"{name}_{p}"): f(x, y, exps)) for p in ("numpy", "numba")}
            else:
                calls = {p: (lambda f=getattr(K, f"{name}_{p}"): f(x, y, w, 0.5, 0.5, 0.7, exps))
                         for p in ("numpy", "numba")}
            t = {p: min(timeit.repeat(c, number=repeat, repeat=3)) / repeat for p, c in calls.items()}
            rows.append((name, npts, degree, t["numpy"], t["numba"]))
    print(f"{'kernel':18s} {'npts':>6s} {'deg':>4s} {'numpy [us]':>11s} {'numba [us]':>11s} {'speedup':>8s}")
    for name, npts, degree, tn, tb in rows:
        print(f"{name:18s} {npts:6d} {degree:4d} {tn * 1e6:11.2f} {tb * 1e6:11.2f} {tn / tb:8.2f}")


def bench_assembly(n):
    out = {}
    for label, flag in (("numba", "0"), ("numpy", "1")):
        env = dict(os.environ, CURVEDVEM_DISABLE_NUMBA=flag)
        res = subprocess.run([sys.executable, "-c", ASSEMBLY_SNIPPET.format(n=n)], env=env,
                             capture_output=True, text=True, check=True)
        out[label] = float(res.stdout.split()[-1])
    print(f"assemble+solve, quad n={n}, k=3: numpy {out['numpy']:.2f}s, numba {out['numba']:.2f}s")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=200)
    p.add_argument("--assembly", type=int, default=16, help="quad level for the end-to-end timing (0 skips)")
    args = p.parse_args()
    K.monomial_values_numba(np.zeros(1), np.zeros(1), K.monomial_exponents(1))   # compile
    K.boundary_moments_numba(np.zeros(1), np.zeros(1), np.zeros(1), 0.0, 0.0, 1.0, K.monomial_exponents(1))
    bench_kernels(args.repeat)
    if args.assembly:
        bench_assembly(args.assembly)


if __name__ == "__main__":
    main()
