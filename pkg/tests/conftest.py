import hypothesis
import hypothesis.strategies as st
import numpy as np
import pytest

from tproduct import SpectralTensor3, Tensor3, idft_mode3

hypothesis.settings.register_profile("default", max_examples=40, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=5, deadline=None)
hypothesis.settings.load_profile("default")

_ACCEPTANCE_LINES = []


@pytest.fixture
def rng():
    return np.random.default_rng(20180601)


@pytest.fixture
def report():
    """Record one PASS/FAIL line per acceptance criterion."""

    def _record(label, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] {label}" + (f"  ({detail})" if detail else "")
        _ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def tensors(draw, max_n=5, max_n3=6):
    """A random standard-normal tensor with small random dimensions."""
    n1 = draw(st.integers(1, max_n))
    n2 = draw(st.integers(1, max_n))
    n3 = draw(st.integers(1, max_n3))
    seed = draw(st.integers(0, 2**32 - 1))
    return Tensor3.random(n1, n2, n3, rng=seed)


def rel(x, ref):
    x, ref = np.asarray(x), np.asarray(ref)
    d = np.linalg.norm(ref)
    return np.linalg.norm(x - ref) / d if d > 0 else np.linalg.norm(x)


def well_conditioned(n, n3, rng, cond=1e3):
    """Random tensor whose Fourier slices have condition number <= cond."""
    spec = np.empty((n, n, n3), dtype=complex)
    for k in range(n3 // 2 + 1):
        real = k == 0 or 2 * k == n3
        u, _ = np.linalg.qr(rng.standard_normal((n, n)) + (0 if real else 1j * rng.standard_normal((n, n))))
        v, _ = np.linalg.qr(rng.standard_normal((n, n)) + (0 if real else 1j * rng.standard_normal((n, n))))
        s = np.exp(rng.uniform(0, np.log(cond), n))
        s[0], s[-1] = 1.0, cond
        spec[:, :, k] = (u * s) @ v.conj().T
    for k in range(n3 // 2 + 1, n3):
        spec[:, :, k] = np.conj(spec[:, :, n3 - k])
    return idft_mode3(SpectralTensor3(spec))
