"""Exit criteria for the library, one test per criterion.

Each test records a PASS/FAIL line through the ``report`` fixture; the
lines are repeated in the pytest terminal summary.
"""

import itertools
import time

import numpy as np
import pytest

from conftest import rel, well_conditioned
from tproduct import (
    SingularTensor,
    SpectralTensor3,
    Tensor3,
    bdiag,
    dft_mode3,
    frobenius_norm,
    idft_mode3,
    prox_tnn,
    teye,
    tinv,
    tnn,
    tprod,
    tqr,
    tran,
    tsn,
    tsvd,
    tubal_rank,
)
from tproduct.cli import main
from tproduct.harness import bench_shape
from tproduct.io import read_tensor, write_tensor
from tproduct.ops import offdiagonal_norm, orthogonality_residual
from tproduct.verification import block_diagonalize_naive, matrix_svt, tnn_naive, tprod_naive, tsn_naive

SEED = 1806


@pytest.fixture
def gen():
    return np.random.default_rng(SEED)


def test_ac1_tprod_matches_block_circulant_definition(gen, report):
    t0 = time.perf_counter()
    worst, count = 0.0, 0
    for _ in range(250):
        n1, n2, l = gen.integers(1, 6, size=3)
        n3 = gen.integers(1, 7)
        a = Tensor3.random(n1, n2, n3, rng=gen)
        b = Tensor3.random(n2, l, n3, rng=gen)
        worst = max(worst, rel(tprod(a, b).data, tprod_naive(a, b).data))
        count += 1
    elapsed = time.perf_counter() - t0
    ok = count >= 200 and worst <= 1e-10 and elapsed < 10
    report("AC1 t-product vs bcirc oracle", ok, f"{count} cases, max rel err {worst:.2e}, {elapsed:.2f}s")
    assert ok


def test_ac2_block_diagonalization(gen, report):
    t0 = time.perf_counter()
    worst, parities = 0.0, set()
    for i in range(50):
        n1, n2 = gen.integers(1, 5, size=2)
        n3 = (4, 5)[i] if i < 2 else int(gen.integers(1, 6))
        parities.add(n3 % 2)
        a = Tensor3.random(n1, n2, n3, rng=gen)
        worst = max(worst, rel(block_diagonalize_naive(a), bdiag(dft_mode3(a))))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-10 and parities == {0, 1} and elapsed < 5
    report("AC2 block diagonalization by Kronecker DFT", ok, f"max rel err {worst:.2e}, {elapsed:.2f}s")
    assert ok


def test_ac3_tsvd_contract(gen, report):
    t0 = time.perf_counter()
    rec = orth = offd = 0.0
    ordered = True
    for dims in itertools.product(range(1, 7), repeat=3):
        a = Tensor3.random(*dims, rng=gen)
        u, s, v = tsvd(a)
        rec = max(rec, rel(tprod(tprod(u, s), tran(v)).data, a.data))
        orth = max(orth, orthogonality_residual(u), orthogonality_residual(v))
        offd = max(offd, offdiagonal_norm(s))
        d = np.diag(s.frontal(0))
        ordered &= bool(np.all(d[:-1] >= d[1:]) and np.all(d >= 0))
    elapsed = time.perf_counter() - t0
    ok = rec <= 1e-9 and orth <= 1e-8 and offd == 0.0 and ordered and elapsed < 30
    report("AC3 t-SVD contract", ok,
           f"recon {rec:.2e}, orth {orth:.2e}, off-diag {offd:.1e}, ordered={ordered}, {elapsed:.2f}s")
    assert ok


def test_ac4_planted_tubal_rank(gen, report):
    t0 = time.perf_counter()
    hits = 0
    for _ in range(100):
        r = int(gen.integers(1, 6))
        a = tprod(Tensor3.random(6, r, 4, rng=gen), Tensor3.random(r, 6, 4, rng=gen))
        hits += tubal_rank(a) == r
    elapsed = time.perf_counter() - t0
    ok = hits >= 98 and elapsed < 10
    report("AC4 planted tubal rank recovery", ok, f"{hits}/100 recovered, {elapsed:.2f}s")
    assert ok


def test_ac5_norm_identities(gen, report):
    worst_tsn = worst_tnn = 0.0
    for _ in range(50):
        n1, n2 = gen.integers(1, 5, size=2)
        n3 = gen.integers(1, 6)
        a = Tensor3.random(n1, n2, n3, rng=gen)
        worst_tsn = max(worst_tsn, abs(tsn(a) - tsn_naive(a)) / tsn_naive(a))
        worst_tnn = max(worst_tnn, abs(tnn(a) - tnn_naive(a)) / tnn_naive(a))
    eye_err = max(abs(tnn(teye(n, n3)) - n) for n in range(1, 6) for n3 in range(1, 6))
    ok = worst_tsn <= 1e-10 and worst_tnn <= 1e-10 and eye_err <= 1e-12
    report("AC5 spectral/nuclear norm identities", ok,
           f"tsn {worst_tsn:.2e}, tnn {worst_tnn:.2e}, tnn(I) err {eye_err:.1e}")
    assert ok


def _objective(x, y, tau):
    return tau * tnn(x) + 0.5 * frobenius_norm(x - y) ** 2


def test_ac6_prox_optimality(gen, report):
    t0 = time.perf_counter()
    violations = 0
    for _ in range(20):
        y = Tensor3.random(4, 4, 3, rng=gen)
        tau = gen.uniform(0.05, 0.95) * tsn(y)
        x = prox_tnn(y, tau)
        f0 = _objective(x, y, tau)
        for i in range(100):
            d = gen.standard_normal(y.shape)
            d *= (1e-3 if i % 2 else 1e-2) * frobenius_norm(y) / np.linalg.norm(d)
            violations += not f0 <= _objective(Tensor3(x.data + d), y, tau)
    y = Tensor3.random(4, 4, 3, rng=gen)
    identity_ok = np.array_equal(prox_tnn(y, 0.0).data, y.data)
    zero_ok = not prox_tnn(y, tsn(y)).data.any()
    m = gen.standard_normal((4, 5))
    svt_err = np.max(np.abs(prox_tnn(m[:, :, None], 0.6).data[:, :, 0] - matrix_svt(m, 0.6)))
    elapsed = time.perf_counter() - t0
    ok = violations == 0 and identity_ok and zero_ok and svt_err <= 1e-10 and elapsed < 20
    report("AC6 prox optimality", ok,
           f"{violations} violations / 2000, tau=0 ok={identity_ok}, zero ok={zero_ok}, "
           f"svt err {svt_err:.1e}, {elapsed:.2f}s")
    assert ok


def test_ac7_tqr_contract(gen, report):
    rec = orth = lower = 0.0
    for dims in itertools.product(range(1, 7), repeat=3):
        a = Tensor3.random(*dims, rng=gen)
        q, r = tqr(a)
        rec = max(rec, rel(tprod(q, r).data, a.data))
        orth = max(orth, orthogonality_residual(q))
        lower = max(lower, np.max(np.abs(np.tril(np.moveaxis(r.data, 2, 0), -1)), initial=0.0))
    ok = rec <= 1e-10 and orth <= 1e-8 and lower <= 1e-10
    report("AC7 t-QR contract", ok, f"recon {rec:.2e}, orth {orth:.2e}, below-diag {lower:.1e}")
    assert ok


def test_ac8_inverse(gen, report):
    worst = 0.0
    for n in range(1, 6):
        for n3 in range(1, 6):
            a = well_conditioned(n, n3, gen, cond=1e3)
            b = tinv(a)
            eye = teye(n, n3).data
            worst = max(worst, np.linalg.norm(tprod(a, b).data - eye), np.linalg.norm(tprod(b, a).data - eye))

    def singular(t):
        try:
            tinv(t)
        except SingularTensor:
            return True
        return False

    spec = np.fft.fft(gen.standard_normal((4, 4, 5)), axis=2)
    spec[:, :, 2] = spec[:, :, 3] = 0
    planted = idft_mode3(SpectralTensor3(spec))
    zero_ok, planted_ok = singular(Tensor3.zeros(3, 3, 4)), singular(planted)
    ok = worst <= 1e-7 and zero_ok and planted_ok
    report("AC8 tensor inverse", ok,
           f"max residual {worst:.2e}, zero singular={zero_ok}, planted singular={planted_ok}")
    assert ok


def test_ac9_files_and_cli(gen, report, tmp_path, capsys):
    a = Tensor3.random(3, 4, 5, rng=gen)
    write_tensor(tmp_path / "a.tns3", a)
    round_trip = read_tensor(tmp_path / "a.tns3").data.tobytes(order="F") == a.data.tobytes(order="F")
    verify_code = main(["verify", "--dims", "3,3,4", "--trials", "20"])
    capsys.readouterr()
    rows = [bench_shape(*s, repeats=1, rng=gen) for s in [(4, 4, 4, 4), (8, 6, 5, 7), (16, 16, 16, 16)]]
    big = bench_shape(32, 32, 32, 32, repeats=5, rng=gen)
    rows.append(big)
    bench_ok = all(r.max_rel_error <= 1e-8 for r in rows)
    faster = big.fft_seconds < big.naive_seconds
    ok = round_trip and verify_code == 0 and bench_ok and faster
    report("AC9 file format and CLI", ok,
           f"round trip={round_trip}, verify exit {verify_code}, bench errors ok={bench_ok}, "
           f"fft {big.fft_seconds * 1e3:.2f}ms vs naive {big.naive_seconds * 1e3:.2f}ms")
    assert ok
