#!/usr/bin/env python3
"""Benchmark the pure-Python and compiled elimination kernels.

Runs both kernels on synthetic dense integer matrices and on real
cofactor constraint systems, checks they return identical ranks, and
prints a timing table.  Pass ``--heavy`` to include the largest table
cell used by the acceptance suite.

    python benchmarks/bench_kernel.py [--heavy]
"""

import argparse
import random
import time

from starspline import _bareiss
from starspline import splinedim, starmesh
from starspline.linalg import _fast_gcd, _mpz

try:
    from starspline import _bareiss_cy
except ImportError:
    _bareiss_cy = None


def synthetic(rows, cols, seed, density=0.4, span=10 ** 6):
    rng = random.Random(seed)
    return [
        [rng.randint(-span, span) if rng.random() < density else 0
         for _ in range(cols)]
        for _ in range(rows)
    ]


def cofactor_rows(name, star_seed, r, d):
    star = starmesh.perturb(starmesh.catalog(name), star_seed, 16)
    captured = []
    original = splinedim.rank_of_int_rows

    def capture(rows):
        captured.append(rows)
        return original(rows)

    splinedim.rank_of_int_rows = capture
    try:
        splinedim.homog_dim(star, r, d)
    finally:
        splinedim.rank_of_int_rows = original
    return [[int(a) for a in row] for row in captured[0]]


def run(kernel, rows):
    if _mpz is not None:
        prepared = [[_mpz(a) for a in row] for row in rows]
        start = time.perf_counter()
        rank = kernel.rank_of_rows(prepared, gcd_fn=_fast_gcd)
    else:
        prepared = [list(row) for row in rows]
        start = time.perf_counter()
        rank = kernel.rank_of_rows(prepared)
    return rank, time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--heavy", action="store_true",
                        help="include the largest acceptance-table system")
    args = parser.parse_args()

    cases = [
        ("dense 60x60", synthetic(60, 60, 1)),
        ("dense 140x120", synthetic(140, 120, 2)),
        ("bipyramid r=2 d=8", cofactor_rows("pentagonal-bipyramid", 1, 2, 8)),
        ("bipyramid r=3 d=10", cofactor_rows("pentagonal-bipyramid", 1, 3, 10)),
        ("cube r=2 d=9", cofactor_rows("cube-barycentric", 1, 2, 9)),
    ]
    if args.heavy:
        cases.append(("bipyramid r=4 d=13",
                      cofactor_rows("pentagonal-bipyramid", 1, 4, 13)))

    integers = "gmpy2.mpz" if _mpz is not None else "int"
    print(f"integer type inside the elimination: {integers}")
    header = f"{'case':24} {'size':>10} {'pure (s)':>10} {'cython (s)':>11} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, rows in cases:
        size = f"{len(rows)}x{len(rows[0])}"
        rank_pure, t_pure = run(_bareiss, rows)
        if _bareiss_cy is None:
            print(f"{label:24} {size:>10} {t_pure:>10.3f} {'n/a':>11}")
            continue
        rank_cy, t_cy = run(_bareiss_cy, rows)
        assert rank_pure == rank_cy, (label, rank_pure, rank_cy)
        print(f"{label:24} {size:>10} {t_pure:>10.3f} {t_cy:>11.3f} "
              f"{t_pure / t_cy:>7.2f}x")
    if _bareiss_cy is None:
        print("compiled kernel not built; run `python setup.py build_ext --inplace`")


if __name__ == "__main__":
    main()
