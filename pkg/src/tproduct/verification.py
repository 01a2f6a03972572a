"""Slow reference implementations used as ground truth.

Nothing here uses an FFT. The t-product is evaluated literally as
``fold(bcirc(A) @ unfold(B))``, the norms come from dense SVDs of the
explicit block circulant matrix, and the block diagonalization is formed
with the literal DFT matrix and Kronecker products. All of it is
``O(n**2)`` or worse in ``n3`` and meant for small inputs.
"""

from __future__ import annotations

import numpy as np

from .core import Tensor3, as_tensor, bcirc, fold, unfold
from .errors import ShapeMismatch

__all__ = [
    "dft_matrix",
    "tprod_naive",
    "tsn_naive",
    "tnn_naive",
    "block_diagonalize_naive",
    "matrix_svt",
]


def dft_matrix(n: int) -> np.ndarray:
    """``F[j, k] = exp(-2j*pi*j*k/n)``, built entry by entry."""
    jk = np.outer(np.arange(n), np.arange(n))
    return np.exp(-2j * np.pi * (jk % n) / n)


def tprod_naive(a, b) -> Tensor3:
    a, b = as_tensor(a), as_tensor(b)
    if a.n2 != b.n1 or a.n3 != b.n3:
        raise ShapeMismatch(f"cannot t-multiply shapes {a.shape} and {b.shape}")
    return fold(bcirc(a) @ unfold(b), (a.n1, b.n2, a.n3))


def tsn_naive(a) -> float:
    """Largest singular value of the explicit ``bcirc(a)``."""
    return float(np.linalg.svd(bcirc(a), compute_uv=False)[0])


def tnn_naive(a) -> float:
    """``(1/n3)`` times the nuclear norm of the explicit ``bcirc(a)``."""
    a = as_tensor(a)
    return float(np.sum(np.linalg.svd(bcirc(a), compute_uv=False)) / a.n3)


def block_diagonalize_naive(a) -> np.ndarray:
    """``(F kron I_n1) @ bcirc(a) @ (F^-1 kron I_n2)`` with dense Kronecker products."""
    a = as_tensor(a)
    n1, n2, n3 = a.shape
    f = dft_matrix(n3)
    f_inv = f.conj().T / n3
    left = np.kron(f, np.eye(n1))
    right = np.kron(f_inv, np.eye(n2))
    return left @ bcirc(a) @ right


def matrix_svt(m, tau: float) -> np.ndarray:
    """Matrix singular value thresholding ``U (S - tau)_+ V^T``."""
    u, s, vt = np.linalg.svd(np.asarray(m, dtype=np.float64), full_matrices=False)
    return (u * np.maximum(s - tau, 0.0)) @ vt
