#!/usr/bin/env python3
"""Sweep n3 at fixed slice size and write FFT vs naive t-product timings as CSV.

    python scripts/bench_tprod.py --n 32 --n3 2 4 8 16 32 64 --out bench.csv
"""

import argparse
import sys

import numpy as np

from tproduct.harness import bench_shape, write_bench_csv


def main():
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--n", type=int, default=32, help="n1 = n2 = l")
    p.add_argument("--n3", type=int, nargs="+", default=[2, 4, 8, 16, 32, 64])
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    args = p.parse_args()

    rng = np.random.default_rng(args.seed)
    rows = []
    for n3 in args.n3:
        row = bench_shape(args.n, args.n, args.n, n3, repeats=args.repeats, rng=rng)
        print(f"n3={n3:4d}  fft {row.fft_seconds * 1e3:8.3f} ms  naive {row.naive_seconds * 1e3:8.3f} ms  "
              f"speedup {row.naive_seconds / row.fft_seconds:6.1f}x", file=sys.stderr)
        rows.append(row)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            write_bench_csv(rows, fh)
    else:
        write_bench_csv(rows, sys.stdout)


if __name__ == "__main__":
    main()
