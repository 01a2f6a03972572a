"""t-product, conjugate transpose, identity, inverse and structural predicates."""

from __future__ import annotations

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
from .errors import ShapeMismatch, SingularTensor

__all__ = ["tprod", "tran", "teye", "tinv", "is_orthogonal", "is_fdiagonal"]


def tprod(a, b) -> Tensor3:
    """t-product ``a * b`` of an ``n1 x n2 x n3`` and an ``n2 x l x n3`` tensor.

    Works in the Fourier domain: only the first ``ceil((n3 + 1) / 2)``
    spectral slices are multiplied, the rest are their conjugates.

    Examples
    --------
    >>> tprod(np.array([[[1.0, 2.0]]]), np.array([[[3.0, 4.0]]])).data.ravel()
    array([11., 10.])
    """
    a, b = as_tensor(a), as_tensor(b)
    if a.n2 != b.n1 or a.n3 != b.n3:
        raise ShapeMismatch(f"cannot t-multiply shapes {a.shape} and {b.shape}")
    n3 = a.n3
    h = half_count(n3)
    half = np.matmul(slice_stack(a)[:h], slice_stack(b)[:h])
    out, _ = ifft_stack(conj_fill(half, n3))
    return Tensor3._wrap(out)


def tran(a) -> Tensor3:
    """Conjugate transpose: transpose each slice, then reverse slices 2..n3."""
    a = as_tensor(a)
    n3 = a.n3
    order = [0] + list(range(n3 - 1, 0, -1))
    return Tensor3._wrap(a.data.transpose(1, 0, 2)[:, :, order])


def teye(n: int, n3: int) -> Tensor3:
    """Identity tensor: first frontal slice ``I_n``, the others zero."""
    if n < 1 or n3 < 1:
        raise ValueError(f"teye needs n >= 1 and n3 >= 1, got n={n}, n3={n3}")
    out = np.zeros((n, n, n3))
    out[:, :, 0] = np.eye(n)
    return Tensor3._wrap(out)


def _slice_inverse(m: np.ndarray) -> np.ndarray:
    return np.linalg.solve(m, np.broadcast_to(np.eye(m.shape[-1], dtype=m.dtype), m.shape))


def tinv(a, tol: Tolerance = DEFAULT_TOL) -> Tensor3:
    """Inverse under the t-product.

    Every explicitly computed Fourier slice is inverted, provided its
    smallest singular value exceeds ``inv_rtol`` times the largest singular
    value over all slices.

    Raises
    ------
    ShapeMismatch
        If the frontal slices are not square.
    SingularTensor
        If some Fourier slice is singular to working precision.
    """
    a = as_tensor(a)
    n1, n2, n3 = a.shape
    if n1 != n2:
        raise ShapeMismatch(f"tinv needs square frontal slices, got shape {a.shape}")
    h = half_count(n3)
    half = slice_stack(a)[:h]
    sv = np.linalg.svd(half, compute_uv=False)
    top = float(sv[:, 0].max())
    floor = tol.inv_threshold(a.shape) * top
    smallest = sv[:, -1]
    if top == 0.0 or np.any(smallest <= floor):
        k = int(np.argmin(smallest))
        raise SingularTensor(
            f"Fourier slice {k} is singular: sigma_min={smallest[k]:.3e}, "
            f"threshold={floor:.3e}"
        )
    inv = np.empty_like(half)
    slots = real_slots(n3)
    inv[slots] = _slice_inverse(half[slots].real)
    rest = [k for k in range(h) if k not in slots]
    if rest:
        inv[rest] = _slice_inverse(half[rest])
    out, _ = ifft_stack(conj_fill(inv, n3))
    return Tensor3._wrap(out)


def _default_tol(shape) -> float:
    n1, n2, n3 = shape
    return 1e-8 * max(n1, n2) * np.sqrt(n3)


def orthogonality_residual(q) -> float:
    """``max(||Q^* * Q - I||_F, ||Q * Q^* - I||_F)``."""
    q = as_tensor(q)
    if q.n1 != q.n2:
        raise ShapeMismatch(f"orthogonality needs square frontal slices, got shape {q.shape}")
    eye = teye(q.n1, q.n3).data
    qt = tran(q)
    left = np.linalg.norm(tprod(qt, q).data - eye)
    right = np.linalg.norm(tprod(q, qt).data - eye)
    return float(max(left, right))


def is_orthogonal(q, tol: float | None = None) -> bool:
    """Whether ``Q^* * Q = Q * Q^* = I`` within ``tol`` in Frobenius norm.

    The default tolerance is ``1e-8 * n * sqrt(n3)``.
    """
    q = as_tensor(q)
    if tol is None:
        tol = _default_tol(q.shape)
    return orthogonality_residual(q) <= tol


def offdiagonal_norm(a) -> float:
    """Frobenius norm of everything off the main diagonal of every slice."""
    a = as_tensor(a)
    mask = ~np.eye(a.n1, a.n2, dtype=bool)
    return float(np.linalg.norm(a.data[mask]))


def is_fdiagonal(a, tol: float | None = None) -> bool:
    """Whether every frontal slice is diagonal within ``tol`` (Frobenius, off-diagonal part)."""
    a = as_tensor(a)
    if tol is None:
        tol = _default_tol(a.shape)
    return offdiagonal_norm(a) <= tol
