"""Compare the compiled and pure-Python echelon kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Runs random dense and sparse insertions over F_p and over Q, then full
curve analyses with each kernel in a fresh interpreter.
"""
from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import timeit

from curvemilnor import _echelon_py
from curvemilnor.linalg import make_echelon

try:
    from curvemilnor import _echelon as _compiled
except ImportError:
    _compiled = None


def random_rows(rng, nrows, ncols, p, density):
    rows = []
    for _ in range(nrows):
        if p is None:
            rows.append([rng.randint(-5, 5) if rng.random() < density else 0 for _ in range(ncols)])
        else:
            rows.append([rng.randrange(p) if rng.random() < density else 0 for _ in range(ncols)])
    return rows


def bench_kernel(backend, rows, ncols, p):
    def go():
        ech = make_echelon(ncols, p, backend)
        for r in rows:
            ech.insert(r)
        ech.rref()
    return go


CURVE_SCRIPT = """
import time
from curvemilnor import engine, BACKEND
from curvemilnor.corpus import full_corpus
from curvemilnor.series import FieldSpec
cs = list(full_corpus().values()) + list(full_corpus(FieldSpec(101)).values())
t = time.perf_counter()
for c in cs:
    engine.invariants(c)
    engine.value_semigroup(c)
print(BACKEND, time.perf_counter() - t)
"""


def bench_corpus(pure: bool):
    env = dict(os.environ)
    if pure:
        env["CURVEMILNOR_PURE"] = "1"
    else:
        env.pop("CURVEMILNOR_PURE", None)
    out = subprocess.run([sys.executable, "-c", CURVE_SCRIPT], env=env, capture_output=True, text=True, check=True)
    name, secs = out.stdout.split()
    return name, float(secs)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    rng = random.Random(1)
    cases = [
        ("F_101 dense 120x160", 120, 160, 101, 1.0),
        ("F_101 sparse 200x300", 200, 300, 101, 0.05),
        ("F_32003 dense 150x150", 150, 150, 32003, 1.0),
        ("Q dense 40x60", 40, 60, None, 1.0),
        ("Q sparse 150x200", 150, 200, None, 0.04),
    ]
    print(f"{'case':<24} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for label, nr, nc, p, dens in cases:
        rows = random_rows(rng, nr, nc, p, dens)
        t_py = min(timeit.repeat(bench_kernel(_echelon_py, rows, nc, p), number=1, repeat=args.repeat))
        if _compiled is None:
            print(f"{label:<24} {t_py:>10.4f} {'n/a':>11} {'':>8}")
            continue
        t_c = min(timeit.repeat(bench_kernel(_compiled, rows, nc, p), number=1, repeat=args.repeat))
        print(f"{label:<24} {t_py:>10.4f} {t_c:>11.4f} {t_py / t_c:>7.1f}x")
    print()
    for pure in (True, False):
        name, secs = bench_corpus(pure)
        print(f"full corpus analysis, {name:<8} kernel: {secs:.3f} s")


if __name__ == "__main__":
    main()
