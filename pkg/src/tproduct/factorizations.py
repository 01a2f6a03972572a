"""t-SVD, tensor singular values, tubal rank and t-QR."""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .core import (
    DEFAULT_TOL,
    Tensor3,
    Tolerance,
    as_tensor,
    conj_fill,
    half_count,
    ifft_stack,
    real_slots,
    slice_stack,
)

__all__ = [
    "TSvdFactors",
    "TQrFactors",
    "tsvd",
    "singular_values",
    "tubal_rank",
    "tubal_rank_from_tubes",
    "tqr",
]


class TSvdFactors(NamedTuple):
    """``A = U * S * V^*`` with ``U``, ``V`` orthogonal and ``S`` f-diagonal."""

    u: Tensor3
    s: Tensor3
    v: Tensor3


class TQrFactors(NamedTuple):
    """``A = Q * R`` with ``Q`` orthogonal and ``R`` f-upper triangular."""

    q: Tensor3
    r: Tensor3


def _split_slots(n3: int):
    slots = real_slots(n3)
    return slots, [k for k in range(half_count(n3)) if k not in slots]


def _spectral_svd(half: np.ndarray, n3: int, full_matrices: bool = True):
    """Batched SVD of the explicitly computed Fourier slices.

    Self-conjugate slices are real, so they get a real SVD; this keeps their
    singular vectors real and the inverse DFT of the factors real.
    """
    slots, rest = _split_slots(n3)
    h, p, q = half.shape
    k = min(p, q)
    pu, qv = (p, q) if full_matrices else (k, k)
    u = np.zeros((h, p, pu), dtype=np.complex128)
    s = np.zeros((h, k))
    vh = np.zeros((h, qv, q), dtype=np.complex128)
    u[slots], s[slots], vh[slots] = np.linalg.svd(half[slots].real, full_matrices=full_matrices)
    if rest:
        u[rest], s[rest], vh[rest] = np.linalg.svd(half[rest], full_matrices=full_matrices)
    return u, s, vh


def _slice_weights(n3: int) -> np.ndarray:
    # how many of the n3 Fourier slices each explicitly computed slice stands for
    w = np.full(half_count(n3), 2.0)
    w[real_slots(n3)] = 1.0
    return w


def _first_slice_diagonal(s: np.ndarray, n3: int) -> np.ndarray:
    """Mean of the spectral singular values over all ``n3`` frequencies.

    ``s`` is ``(h, k)`` with each row nonincreasing. Every column is summed
    in the same order so the result stays exactly nonincreasing.
    """
    w = _slice_weights(n3)
    return np.array([math.fsum(w * s[:, i]) / n3 for i in range(s.shape[1])])


def tsvd(a) -> TSvdFactors:
    """Full t-SVD computed slice by slice in the Fourier domain.

    The ``U`` and ``V`` factors are not unique. Only the reconstruction and
    structural properties are guaranteed, not particular signs or phases.
    """
    a = as_tensor(a)
    n1, n2, n3 = a.shape
    half = slice_stack(a)[:half_count(n3)]
    u_bar, s_bar, vh_bar = _spectral_svd(half, n3)
    k = min(n1, n2)

    s_half = np.zeros(half.shape)
    idx = np.arange(k)
    s_half[:, idx, idx] = s_bar
    v_half = np.conj(np.swapaxes(vh_bar, 1, 2))

    u, _ = ifft_stack(conj_fill(u_bar, n3))
    s, _ = ifft_stack(conj_fill(s_half, n3))
    v, _ = ifft_stack(conj_fill(v_half, n3))
    # pin the first-slice diagonal to its closed form so the ordering is exact
    s[idx, idx, 0] = _first_slice_diagonal(s_bar, n3)
    return TSvdFactors(Tensor3._wrap(u), Tensor3._wrap(s), Tensor3._wrap(v))


def singular_values(a) -> np.ndarray:
    """Diagonal of the first frontal slice of ``S``, without forming ``U`` or ``V``.

    Returns a nonincreasing, nonnegative vector of length ``min(n1, n2)``.
    """
    a = as_tensor(a)
    n3 = a.n3
    half = slice_stack(a)[:half_count(n3)]
    slots, rest = _split_slots(n3)
    s = np.zeros((half.shape[0], min(a.n1, a.n2)))
    s[slots] = np.linalg.svd(half[slots].real, compute_uv=False)
    if rest:
        s[rest] = np.linalg.svd(half[rest], compute_uv=False)
    return _first_slice_diagonal(s, n3)


def tubal_rank(a, tol: Tolerance = DEFAULT_TOL) -> int:
    """Number of singular values above ``rank_rtol`` times the largest one."""
    a = as_tensor(a)
    sv = singular_values(a)
    if sv.size == 0 or sv[0] == 0.0:
        return 0
    return int(np.count_nonzero(sv > tol.rank_threshold(a.shape) * sv[0]))


def tubal_rank_from_tubes(s, tol: Tolerance = DEFAULT_TOL) -> int:
    """Count the nonzero singular tubes ``S[i, i, :]`` of an f-diagonal ``S``.

    A tube counts as nonzero when its 2-norm exceeds ``rank_rtol`` times the
    largest tube norm. In exact arithmetic this agrees with :func:`tubal_rank`.
    """
    s = as_tensor(s)
    k = min(s.n1, s.n2)
    idx = np.arange(k)
    norms = np.linalg.norm(s.data[idx, idx, :], axis=1)
    if norms.size == 0 or norms.max() == 0.0:
        return 0
    return int(np.count_nonzero(norms > tol.rank_threshold(s.shape) * norms.max()))


def tqr(a) -> TQrFactors:
    """Full t-QR via per-slice complete QR in the Fourier domain."""
    a = as_tensor(a)
    n1, n2, n3 = a.shape
    half = slice_stack(a)[:half_count(n3)]
    slots, rest = _split_slots(n3)
    q_half = np.zeros((half.shape[0], n1, n1), dtype=np.complex128)
    r_half = np.zeros(half.shape, dtype=np.complex128)
    q_half[slots], r_half[slots] = np.linalg.qr(half[slots].real, mode="complete")
    if rest:
        q_half[rest], r_half[rest] = np.linalg.qr(half[rest], mode="complete")
    q, _ = ifft_stack(conj_fill(q_half, n3))
    r, _ = ifft_stack(conj_fill(r_half, n3))
    return TQrFactors(Tensor3._wrap(q), Tensor3._wrap(r))
