#!/usr/bin/env python3
"""Run the oracle checks over every shape in {1..N}^3 and report the worst errors."""

import argparse
import itertools

from tproduct.harness import TOLERANCES, run_checks


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-dim", type=int, default=5)
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()

    worst = dict.fromkeys(TOLERANCES, 0.0)
    for dims in itertools.product(range(1, args.max_dim + 1), repeat=3):
        for r in run_checks(dims, args.trials, args.seed):
            worst[r.name] = max(worst[r.name], r.max_err)
    failed = False
    for name, err in worst.items():
        ok = err <= TOLERANCES[name]
        failed |= not ok
        print(f"{'PASS' if ok else 'FAIL'} {name:28s} worst={err:.3e} tol={TOLERANCES[name]:.0e}")
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
