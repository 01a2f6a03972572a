"""Oracle equivalence checks and the FFT-vs-naive micro-benchmark."""

from __future__ import annotations

import csv
import time
from dataclasses import astuple, dataclass, fields

import numpy as np

from .core import Tensor3, bcirc, bdiag, dft_mode3, unfold
from .factorizations import tqr, tsvd
from .norms import tnn, tsn
from .ops import tprod, tran
from .verification import block_diagonalize_naive, tnn_naive, tprod_naive, tsn_naive


def rel_err(x, ref) -> float:
    """Relative Frobenius error, or the absolute error when ``ref`` is zero."""
    x, ref = np.asarray(x), np.asarray(ref)
    denom = np.linalg.norm(ref)
    diff = np.linalg.norm(x - ref)
    return float(diff / denom) if denom > 0 else float(diff)


@dataclass
class CheckResult:
    name: str
    max_err: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.max_err <= self.tol

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name} max_err={self.max_err:.3e} tol={self.tol:.0e}"


def _trial_errors(a: Tensor3, b: Tensor3) -> dict[str, float]:
    errs = {
        "tprod_vs_naive": rel_err(tprod(a, b).data, tprod_naive(a, b).data),
        "block_diagonalization": rel_err(block_diagonalize_naive(a), bdiag(dft_mode3(a))),
        "tsn_vs_naive": rel_err(tsn(a), tsn_naive(a)),
        "tnn_vs_naive": rel_err(tnn(a), tnn_naive(a)),
        "transpose_antihomomorphism": rel_err(
            tran(tprod(a, b)).data, tprod(tran(b), tran(a)).data
        ),
    }
    u, s, v = tsvd(a)
    errs["tsvd_reconstruction"] = rel_err(tprod(tprod(u, s), tran(v)).data, a.data)
    q, r = tqr(a)
    errs["tqr_reconstruction"] = rel_err(tprod(q, r).data, a.data)
    errs["bcirc_matvec"] = rel_err(bcirc(a) @ unfold(b), unfold(tprod(a, b)))
    return errs


TOLERANCES = {
    "tprod_vs_naive": 1e-10,
    "block_diagonalization": 1e-10,
    "tsn_vs_naive": 1e-10,
    "tnn_vs_naive": 1e-10,
    "transpose_antihomomorphism": 1e-10,
    "tsvd_reconstruction": 1e-9,
    "tqr_reconstruction": 1e-10,
    "bcirc_matvec": 1e-10,
}


def run_checks(dims=(3, 3, 4), trials: int = 10, seed: int = 0,
               a: Tensor3 | None = None, b: Tensor3 | None = None) -> list[CheckResult]:
    """Run every oracle check and keep the worst error per check.

    When ``a`` is given it is used for every trial (with ``b`` if given,
    otherwise a random right factor). Otherwise each trial draws random
    tensors of shape ``dims`` from a generator seeded with ``seed``.
    """
    rng = np.random.default_rng(seed)
    worst = dict.fromkeys(TOLERANCES, 0.0)
    for _ in range(trials):
        ta = a if a is not None else Tensor3.random(*dims, rng=rng)
        tb = b if b is not None else Tensor3.random(ta.n2, ta.n2, ta.n3, rng=rng)
        for name, e in _trial_errors(ta, tb).items():
            worst[name] = max(worst[name], e)
    return [CheckResult(name, worst[name], TOLERANCES[name]) for name in TOLERANCES]


@dataclass
class BenchReport:
    n1: int
    n2: int
    l: int
    n3: int
    fft_seconds: float
    naive_seconds: float
    max_rel_error: float


BENCH_HEADER = [f.name for f in fields(BenchReport)]


def _best_time(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_shape(n1: int, n2: int, l: int, n3: int, repeats: int = 3, rng=None) -> BenchReport:
    rng = np.random.default_rng(rng)
    a = Tensor3.random(n1, n2, n3, rng=rng)
    b = Tensor3.random(n2, l, n3, rng=rng)
    err = rel_err(tprod(a, b).data, tprod_naive(a, b).data)
    return BenchReport(
        n1, n2, l, n3,
        fft_seconds=_best_time(lambda: tprod(a, b), repeats),
        naive_seconds=_best_time(lambda: tprod_naive(a, b), repeats),
        max_rel_error=err,
    )


def write_bench_csv(rows, stream) -> None:
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(BENCH_HEADER)
    for row in rows:
        n1, n2, l, n3, tf, tn, e = astuple(row)
        w.writerow([n1, n2, l, n3, f"{tf:.6e}", f"{tn:.6e}", f"{e:.3e}"])
