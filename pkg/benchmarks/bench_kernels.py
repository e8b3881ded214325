"""Compare the compiled int64 kernel with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N] [--sizes 16,64,256]

The first table times raw matrix products.  The second times a full
structure check in two subprocesses, one with ALGKIT_PURE_PYTHON=1.
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from algkit import kernels

CHECK = """
import time
from algkit.io import parse_document
from algkit.operators import induce_from_nijenhuis
from algkit.structures import verify_structure
from algkit.kernels import BACKEND
from importlib import resources
from fractions import Fraction
root = resources.files("algkit") / "gallery"
A = parse_document((root / "fourdim-poisson.json").read_bytes(), {"a": Fraction(1), "b": Fraction(2)})
N = parse_document((root / "fourdim-nijenhuis.json").read_bytes(), {k: Fraction(v) for k, v in zip("rst", (1, 2, 3))})
t = time.perf_counter()
for _ in range(%d):
    assert verify_structure(induce_from_nijenhuis(A, N)).holds
print(BACKEND, time.perf_counter() - t)
"""


def bench_matmul(sizes, repeat):
    rng = np.random.default_rng(0)
    print(f"{'n':>6} {'python (s)':>12} {'compiled (s)':>13} {'speedup':>8}")
    for n in sizes:
        a = rng.integers(-50, 50, size=(n, n)).astype(object)
        b = rng.integers(-50, 50, size=(n, n)).astype(object)
        py = min(timeit.repeat(lambda: kernels.matmul_python(a, b), number=1, repeat=repeat))
        if kernels.BACKEND != "compiled":
            print(f"{n:>6} {py:>12.5f} {'n/a':>13} {'':>8}")
            continue
        assert (kernels.matmul_compiled(a, b).astype(object) == kernels.matmul_python(a, b)).all()
        cc = min(timeit.repeat(lambda: kernels.matmul_compiled(a, b), number=1, repeat=repeat))
        print(f"{n:>6} {py:>12.5f} {cc:>13.5f} {py / cc:>7.1f}x")


def bench_check(rounds):
    print(f"\nfull check, {rounds} rounds of induce + verify on the 4-dim example")
    for pure in ("", "1"):
        env = dict(os.environ, ALGKIT_PURE_PYTHON=pure)
        if not pure:
            env.pop("ALGKIT_PURE_PYTHON")
        out = subprocess.run([sys.executable, "-c", CHECK % rounds], env=env, capture_output=True, text=True,
                             check=True).stdout.split()
        print(f"  {out[0]:>9}: {float(out[1]):.3f} s")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", default="16,64,256")
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--rounds", type=int, default=20)
    args = p.parse_args()
    print(f"backend at import: {kernels.BACKEND}, threads: {kernels.threads()}\n")
    bench_matmul([int(s) for s in args.sizes.split(",")], args.repeat)
    bench_check(args.rounds)


if __name__ == "__main__":
    main()
