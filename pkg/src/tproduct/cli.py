"""Command line interface: ``python -m tproduct <command> ...``.

Exit codes: 0 success, 2 usage or shape error, 3 file parse or I/O error,
4 singular tensor, 5 verification failure.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import harness
from .core import Tolerance
from .errors import InvalidTau, ParseError, ShapeMismatch, SingularTensor
from .factorizations import tqr, tsvd, tubal_rank
from .io import read_tensor, write_tensor
from .norms import prox_tnn, tnn, tsn
from .ops import teye, tinv, tprod, tran

EXIT_USAGE = 2
EXIT_IO = 3
EXIT_SINGULAR = 4
EXIT_VERIFY = 5

DEFAULT_BENCH_SHAPES = ["8,8,8,8", "16,16,16,16", "32,32,32,16", "32,32,32,32"]


def _ints(text: str, count: int | None = None) -> tuple[int, ...]:
    try:
        vals = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if count is not None and len(vals) != count:
        raise argparse.ArgumentTypeError(f"expected {count} integers, got {text!r}")
    if any(v < 1 for v in vals):
        raise argparse.ArgumentTypeError(f"dimensions must be positive, got {text!r}")
    return vals


def _positive(text: str) -> float:
    v = float(text)
    if not (np.isfinite(v) and v > 0):
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return v


def _scalar(x: float) -> None:
    print(format(float(x), ".17g"))


def _cmd_tprod(args):
    write_tensor(args.output, tprod(read_tensor(args.input), read_tensor(args.input2)))


def _cmd_tran(args):
    write_tensor(args.output, tran(read_tensor(args.input)))


def _cmd_teye(args):
    write_tensor(args.output, teye(args.n, args.n3))


def _cmd_tinv(args):
    write_tensor(args.output, tinv(read_tensor(args.input), Tolerance(inv_rtol=args.rtol)))


def _cmd_tsvd(args):
    u, s, v = tsvd(read_tensor(args.input))
    for suffix, t in (("U", u), ("S", s), ("V", v)):
        write_tensor(f"{args.output_prefix}_{suffix}.tns3", t)


def _cmd_tqr(args):
    q, r = tqr(read_tensor(args.input))
    for suffix, t in (("Q", q), ("R", r)):
        write_tensor(f"{args.output_prefix}_{suffix}.tns3", t)


def _cmd_tubalrank(args):
    print(tubal_rank(read_tensor(args.input), Tolerance(rank_rtol=args.rtol)))


def _cmd_tsn(args):
    _scalar(tsn(read_tensor(args.input)))


def _cmd_tnn(args):
    _scalar(tnn(read_tensor(args.input)))


def _cmd_prox(args):
    write_tensor(args.output, prox_tnn(read_tensor(args.input), args.tau))


def _cmd_verify(args):
    a = read_tensor(args.input) if args.input else None
    b = read_tensor(args.input2) if args.input2 else None
    trials = 1 if a is not None and b is not None else args.trials
    print(f"seed={args.seed} dims={','.join(map(str, a.shape if a is not None else args.dims))} trials={trials}")
    results = harness.run_checks(args.dims, trials, args.seed, a=a, b=b)
    for r in results:
        print(r.line())
    failed = [r.name for r in results if not r.passed]
    if failed:
        print(f"verify failed: {', '.join(failed)}", file=sys.stderr)
        return EXIT_VERIFY
    return 0


def _cmd_bench(args):
    rng = np.random.default_rng(args.seed)
    print(f"seed={args.seed}", file=sys.stderr)
    rows = [harness.bench_shape(*shape, repeats=args.repeats, rng=rng) for shape in args.shapes]
    if args.output:
        with open(args.output, "w", newline="") as fh:
            harness.write_bench_csv(rows, fh)
    else:
        harness.write_bench_csv(rows, sys.stdout)
    bad = [r for r in rows if not r.max_rel_error <= 1e-8]
    if bad:
        print(f"{len(bad)} bench row(s) exceed max_rel_error 1e-8", file=sys.stderr)
        return EXIT_VERIFY
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tproduct", description="Third-order tensor algebra under the t-product.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def cmd(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=func)
        return sp

    sp = cmd("tprod", _cmd_tprod, "t-product of two tensors")
    sp.add_argument("--input", required=True)
    sp.add_argument("--input2", required=True)
    sp.add_argument("--output", required=True)

    sp = cmd("tran", _cmd_tran, "conjugate tensor transpose")
    sp.add_argument("--input", required=True)
    sp.add_argument("--output", required=True)

    sp = cmd("teye", _cmd_teye, "identity tensor")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--n3", type=int, required=True)
    sp.add_argument("--output", required=True)

    sp = cmd("tinv", _cmd_tinv, "tensor inverse")
    sp.add_argument("--input", required=True)
    sp.add_argument("--output", required=True)
    sp.add_argument("--rtol", type=_positive, default=None, help="singularity threshold override")

    for name, func, what in (("tsvd", _cmd_tsvd, "t-SVD, writes PREFIX_{U,S,V}.tns3"),
                             ("tqr", _cmd_tqr, "t-QR, writes PREFIX_{Q,R}.tns3")):
        sp = cmd(name, func, what)
        sp.add_argument("--input", required=True)
        sp.add_argument("--output-prefix", required=True)

    sp = cmd("tubalrank", _cmd_tubalrank, "tensor tubal rank")
    sp.add_argument("--input", required=True)
    sp.add_argument("--rtol", type=_positive, default=None, help="rank threshold override")

    for name, func, what in (("tsn", _cmd_tsn, "tensor spectral norm"),
                             ("tnn", _cmd_tnn, "tensor nuclear norm")):
        sp = cmd(name, func, what)
        sp.add_argument("--input", required=True)

    sp = cmd("prox-tnn", _cmd_prox, "proximal operator of the tensor nuclear norm")
    sp.add_argument("--input", required=True)
    sp.add_argument("--tau", type=float, required=True)
    sp.add_argument("--output", required=True)

    sp = cmd("verify", _cmd_verify, "compare fast routines against the naive oracles")
    sp.add_argument("--dims", type=lambda t: _ints(t, 3), default=(3, 3, 4))
    sp.add_argument("--trials", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--input", default=None)
    sp.add_argument("--input2", default=None)

    sp = cmd("bench", _cmd_bench, "time FFT vs naive t-product, CSV output")
    sp.add_argument("--shapes", nargs="+", type=lambda t: _ints(t, 4),
                    default=[_ints(s, 4) for s in DEFAULT_BENCH_SHAPES],
                    metavar="N1,N2,L,N3")
    sp.add_argument("--repeats", type=int, default=3)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--output", default=None, help="CSV path (default: stdout)")
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        return args.func(args) or 0
    except (ShapeMismatch, InvalidTau) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    except SingularTensor as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SINGULAR
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
