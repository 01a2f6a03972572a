"""Tensor spectral norm, tensor nuclear norm and its proximal operator (t-SVT)."""

from __future__ import annotations

import numpy as np

from .core import Tensor3, as_tensor, conj_fill, half_count, ifft_stack, real_slots, slice_stack
from .errors import InvalidTau
from .factorizations import singular_values

__all__ = ["tsn", "tnn", "prox_tnn"]


def tsn(a) -> float:
    """Tensor spectral norm, the largest singular value over all Fourier slices.

    Equals the spectral norm of ``bcirc(a)``. Conjugate slices share singular
    values, so only the first ``ceil((n3 + 1) / 2)`` are examined.
    """
    a = as_tensor(a)
    half = slice_stack(a)[:half_count(a.n3)]
    return float(np.linalg.svd(half, compute_uv=False)[:, 0].max())


def tnn(a) -> float:
    """Tensor nuclear norm, the sum of the tensor singular values.

    This is ``(1/n3)`` times the matrix nuclear norm of ``bdiag(dft_mode3(a))``.
    Note the ``1/n3`` factor: it is what makes :func:`prox_tnn` threshold
    each Fourier slice by exactly ``tau``.
    """
    return float(np.sum(singular_values(a)))


def prox_tnn(y, tau: float) -> Tensor3:
    """Proximal operator of ``tau * tnn`` at ``y``.

    Returns the minimizer of ``tau * tnn(X) + 0.5 * ||X - y||_F**2``, computed
    by soft-thresholding the singular values of every Fourier slice by
    ``tau``.

    Parameters
    ----------
    y : Tensor3 or array_like
    tau : float
        Threshold, ``tau >= 0``. ``tau == 0`` returns ``y`` unchanged.

    Raises
    ------
    InvalidTau
        If ``tau`` is negative or not finite.
    """
    y = as_tensor(y)
    tau = float(tau)
    if not np.isfinite(tau) or tau < 0:
        raise InvalidTau(f"tau must be a finite nonnegative number, got {tau!r}")
    if tau == 0.0:
        return y
    n3 = y.n3
    half = slice_stack(y)[:half_count(n3)]
    slots = real_slots(n3)
    rest = [k for k in range(half.shape[0]) if k not in slots]
    w = np.empty_like(half)
    w[slots] = _svt(half[slots].real, tau)
    if rest:
        w[rest] = _svt(half[rest], tau)
    out, _ = ifft_stack(conj_fill(w, n3))
    return Tensor3._wrap(out)


def _svt(m: np.ndarray, tau: float) -> np.ndarray:
    # batched matrix singular value thresholding over the leading axis
    u, s, vh = np.linalg.svd(m, full_matrices=False)
    shrunk = np.maximum(s - tau, 0.0)
    return np.matmul(u * shrunk[..., None, :], vh)
