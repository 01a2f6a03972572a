"""Dense third-order tensors, the mode-3 DFT and the structural matrices.

A :class:`Tensor3` of shape ``(n1, n2, n3)`` is stored as a Fortran-ordered
float64 array, so its flat buffer runs down the columns of frontal slice 1,
then slice 2, and so on. That is the layout the TNS3 file format writes.

The mode-3 DFT uses the unnormalized forward transform with root
``exp(-2j*pi/n3)`` and puts the ``1/n3`` factor on the inverse, the same
convention as ``numpy.fft``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ShapeMismatch, SymmetryViolation

__all__ = [
    "Tensor3",
    "SpectralTensor3",
    "Tolerance",
    "DEFAULT_TOL",
    "as_tensor",
    "dft_mode3",
    "idft_mode3",
    "bcirc",
    "bdiag",
    "unfold",
    "fold",
    "frobenius_norm",
    "inner_product",
]

EPS = np.finfo(np.float64).eps

# relative factor for the default conjugate-symmetry bound
SYM_RTOL = 1e-10


class Tensor3:
    """Immutable real ``n1 x n2 x n3`` tensor.

    Parameters
    ----------
    data : array_like
        Three-dimensional array of finite real numbers. A copy is taken.

    Examples
    --------
    >>> a = Tensor3(np.arange(8.0).reshape(2, 2, 2))
    >>> a.shape
    (2, 2, 2)
    >>> a.frontal(1)
    array([[1., 3.],
           [5., 7.]])
    """

    __slots__ = ("_data",)
    __array_priority__ = 100

    def __init__(self, data):
        arr = np.array(data, dtype=np.float64, order="F")
        if arr.ndim != 3:
            raise ShapeMismatch(f"expected a 3-way array, got {arr.ndim} dimensions")
        if 0 in arr.shape:
            raise ShapeMismatch(f"all dimensions must be positive, got {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("tensor entries must be finite")
        arr.flags.writeable = False
        self._data = arr

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> Tensor3:
        # trusted constructor: arr is a fresh finite float64 array we own
        obj = cls.__new__(cls)
        arr = np.asfortranarray(arr)
        arr.flags.writeable = False
        obj._data = arr
        return obj

    @classmethod
    def zeros(cls, n1: int, n2: int, n3: int) -> Tensor3:
        return cls(np.zeros((n1, n2, n3)))

    @classmethod
    def random(cls, n1: int, n2: int, n3: int, rng=None) -> Tensor3:
        """Standard normal entries drawn from ``rng`` (a seed or a Generator)."""
        rng = np.random.default_rng(rng)
        return cls._wrap(rng.standard_normal((n1, n2, n3)))

    @classmethod
    def from_slices(cls, slices) -> Tensor3:
        """Build a tensor from a sequence of equally sized frontal slices."""
        mats = [np.atleast_2d(np.asarray(m, dtype=np.float64)) for m in slices]
        return cls(np.stack(mats, axis=2))

    @property
    def data(self) -> np.ndarray:
        """Read-only ``(n1, n2, n3)`` view of the entries."""
        return self._data

    @property
    def shape(self) -> tuple[int, int, int]:
        return self._data.shape

    @property
    def n1(self) -> int:
        return self._data.shape[0]

    @property
    def n2(self) -> int:
        return self._data.shape[1]

    @property
    def n3(self) -> int:
        return self._data.shape[2]

    def frontal(self, k: int) -> np.ndarray:
        """Frontal slice ``k`` (zero-based)."""
        return self._data[:, :, k]

    def tube(self, i: int, j: int) -> np.ndarray:
        return self._data[i, j, :]

    def ravel(self) -> np.ndarray:
        """Entries in storage order (columns of slice 1, then slice 2, ...)."""
        return self._data.ravel(order="F")

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self._data
        return self._data.astype(dtype)

    def __repr__(self) -> str:
        return f"Tensor3(shape={self.shape})"

    def _check_same(self, other: Tensor3, op: str) -> None:
        if self.shape != other.shape:
            raise ShapeMismatch(f"cannot {op} tensors of shapes {self.shape} and {other.shape}")

    def __add__(self, other):
        if not isinstance(other, Tensor3):
            return NotImplemented
        self._check_same(other, "add")
        return Tensor3._wrap(self._data + other._data)

    def __sub__(self, other):
        if not isinstance(other, Tensor3):
            return NotImplemented
        self._check_same(other, "subtract")
        return Tensor3._wrap(self._data - other._data)

    def __neg__(self):
        return Tensor3._wrap(-self._data)

    def __mul__(self, alpha):
        if isinstance(alpha, Tensor3):
            return NotImplemented
        return Tensor3(self._data * float(alpha))

    __rmul__ = __mul__

    def __truediv__(self, alpha):
        return Tensor3(self._data / float(alpha))


def as_tensor(a) -> Tensor3:
    """Return ``a`` unchanged if it is a :class:`Tensor3`, else wrap it."""
    if isinstance(a, Tensor3):
        return a
    return Tensor3(a)


class SpectralTensor3:
    """Complex mode-3 DFT image of a real tensor.

    Frontal slice ``k`` holds the Fourier-domain matrix at frequency ``k``.
    Images of real tensors are conjugate symmetric: slice 0 is real and
    slice ``k`` is the conjugate of slice ``n3 - k``. The constructor does
    not enforce this; :func:`idft_mode3` does.
    """

    __slots__ = ("_data",)

    def __init__(self, data):
        arr = np.array(data, dtype=np.complex128)
        if arr.ndim != 3 or 0 in arr.shape:
            raise ShapeMismatch(f"expected a non-empty 3-way array, got shape {arr.shape}")
        arr.flags.writeable = False
        self._data = arr

    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def shape(self) -> tuple[int, int, int]:
        return self._data.shape

    def frontal(self, k: int) -> np.ndarray:
        return self._data[:, :, k]

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self._data
        return self._data.astype(dtype)

    def __repr__(self) -> str:
        return f"SpectralTensor3(shape={self.shape})"

    def symmetry_residual(self) -> float:
        """Largest deviation from conjugate symmetry.

        This is the max of ``|imag(slice 0)|`` and
        ``|slice k - conj(slice n3 - k)|`` over ``k = 1..n3-1``.
        """
        d = self._data
        n3 = d.shape[2]
        res = np.max(np.abs(d[:, :, 0].imag), initial=0.0)
        if n3 > 1:
            mirrored = np.conj(d[:, :, :0:-1])
            res = max(res, np.max(np.abs(d[:, :, 1:] - mirrored), initial=0.0))
        return float(res)

    def is_conjugate_symmetric(self, tol: float) -> bool:
        return self.symmetry_residual() <= tol


@dataclass(frozen=True)
class Tolerance:
    """Numerical thresholds used by rank, inverse and symmetry decisions.

    A field left as ``None`` uses a default that depends on the problem size.

    Attributes
    ----------
    rank_rtol : float, optional
        A singular value counts as zero when it is at most ``rank_rtol``
        times the largest one. Default ``max(n1, n2) * n3 * eps``.
    sym_tol : float, optional
        Absolute bound on conjugate-symmetry and imaginary residues.
        Default ``1e-10 * ||A||_F``.
    inv_rtol : float, optional
        A Fourier slice counts as singular when its smallest singular value
        is at most ``inv_rtol`` times the tensor spectral norm.
        Default ``max(n1, n2) * eps``.
    """

    rank_rtol: float | None = None
    sym_tol: float | None = None
    inv_rtol: float | None = None

    def __post_init__(self):
        for name in ("rank_rtol", "sym_tol", "inv_rtol"):
            v = getattr(self, name)
            if v is not None and not (np.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be a positive finite number, got {v!r}")

    def rank_threshold(self, shape) -> float:
        n1, n2, n3 = shape
        if self.rank_rtol is not None:
            return self.rank_rtol
        return max(n1, n2) * n3 * EPS

    def inv_threshold(self, shape) -> float:
        n1, n2, _ = shape
        if self.inv_rtol is not None:
            return self.inv_rtol
        return max(n1, n2) * EPS

    def symmetry_bound(self, scale: float) -> float:
        """Absolute symmetry bound for a tensor of Frobenius norm ``scale``."""
        if self.sym_tol is not None:
            return self.sym_tol
        return SYM_RTOL * scale


DEFAULT_TOL = Tolerance()


# -- half-spectrum helpers shared by the Fourier-domain algorithms ----------


def half_count(n3: int) -> int:
    """Number of Fourier slices computed explicitly, ``ceil((n3 + 1) / 2)``."""
    return n3 // 2 + 1


def real_slots(n3: int) -> list[int]:
    """Zero-based frequencies whose slice is its own conjugate partner."""
    return [0, n3 // 2] if n3 % 2 == 0 and n3 > 1 else [0]


def slice_stack(a: Tensor3) -> np.ndarray:
    """Forward DFT along mode 3, returned slice-major as ``(n3, n1, n2)``."""
    return np.moveaxis(np.fft.fft(a.data, axis=2), 2, 0)


def conj_fill(half: np.ndarray, n3: int) -> np.ndarray:
    """Extend ``half_count(n3)`` leading slices to all ``n3`` by conjugation.

    ``half`` is slice-major ``(h, p, q)``; slice ``k >= h`` of the result is
    ``conj(slice n3 - k)``.
    """
    h = half_count(n3)
    full = np.empty((n3,) + half.shape[1:], dtype=np.complex128)
    full[:h] = half
    for k in range(h, n3):
        full[k] = np.conj(full[n3 - k])
    return full


def ifft_stack(full: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> tuple[np.ndarray, float]:
    """Inverse DFT of a slice-major conjugate-symmetric stack.

    Returns the real ``(p, q, n3)`` array and the discarded imaginary residue.
    Raises :class:`SymmetryViolation` if the residue exceeds the symmetry bound.
    """
    out = np.fft.ifft(np.moveaxis(full, 0, 2), axis=2)
    real = np.asfortranarray(out.real)
    residue = float(np.max(np.abs(out.imag), initial=0.0))
    n3 = full.shape[0]
    bound = tol.symmetry_bound(float(np.linalg.norm(full)) / np.sqrt(n3))
    if residue > bound:
        raise SymmetryViolation(f"imaginary residue {residue:.3e} exceeds {bound:.3e}")
    return real, residue


# -- public operations -------------------------------------------------------


def dft_mode3(a) -> SpectralTensor3:
    """Unnormalized DFT of every tube ``a[i, j, :]``."""
    a = as_tensor(a)
    return SpectralTensor3(np.fft.fft(a.data, axis=2))


def idft_mode3(s: SpectralTensor3, tol: Tolerance = DEFAULT_TOL) -> Tensor3:
    """Inverse of :func:`dft_mode3`.

    Raises
    ------
    SymmetryViolation
        If ``s`` is not conjugate symmetric within ``tol.sym_tol``. Such a
        spectrum is not the image of any real tensor.
    """
    if not isinstance(s, SpectralTensor3):
        s = SpectralTensor3(s)
    n3 = s.shape[2]
    scale = float(np.linalg.norm(s.data)) / np.sqrt(n3)
    bound = tol.symmetry_bound(scale)
    res = s.symmetry_residual()
    if res > bound:
        raise SymmetryViolation(
            f"spectrum is not conjugate symmetric: residual {res:.3e} exceeds {bound:.3e}"
        )
    return Tensor3._wrap(np.fft.ifft(s.data, axis=2).real)


def bcirc(a) -> np.ndarray:
    """Block circulant matrix of size ``n1*n3 x n2*n3``.

    Block ``(r, c)`` is frontal slice ``(r - c) mod n3``. Memory is
    ``O(n1 * n2 * n3**2)``; meant for testing and small inputs.
    """
    a = as_tensor(a)
    n1, n2, n3 = a.shape
    idx = (np.arange(n3)[:, None] - np.arange(n3)[None, :]) % n3
    blocks = np.moveaxis(a.data, 2, 0)[idx]  # (n3, n3, n1, n2)
    return blocks.transpose(0, 2, 1, 3).reshape(n1 * n3, n2 * n3)


def bdiag(s: SpectralTensor3) -> np.ndarray:
    """Block diagonal matrix whose ``k``-th diagonal block is slice ``k`` of ``s``."""
    d = np.asarray(s.data if isinstance(s, SpectralTensor3) else s)
    n1, n2, n3 = d.shape
    out = np.zeros((n1 * n3, n2 * n3), dtype=np.complex128)
    for k in range(n3):
        out[k * n1:(k + 1) * n1, k * n2:(k + 1) * n2] = d[:, :, k]
    return out


def unfold(a) -> np.ndarray:
    """Stack the frontal slices vertically into an ``n1*n3 x n2`` matrix."""
    a = as_tensor(a)
    n1, n2, n3 = a.shape
    return np.moveaxis(a.data, 2, 0).reshape(n3 * n1, n2)


def fold(m, dims) -> Tensor3:
    """Inverse of :func:`unfold` for target shape ``dims = (n1, n2, n3)``."""
    m = np.asarray(m, dtype=np.float64)
    n1, n2, n3 = (int(d) for d in dims)
    if m.ndim != 2 or m.shape != (n1 * n3, n2):
        raise ShapeMismatch(
            f"cannot fold a matrix of shape {m.shape} into a tensor of shape {(n1, n2, n3)}"
        )
    return Tensor3(np.moveaxis(m.reshape(n3, n1, n2), 0, 2))


def frobenius_norm(a) -> float:
    a = as_tensor(a)
    return float(np.sqrt(np.sum(a.data * a.data)))


def inner_product(a, b) -> float:
    """Sum of entrywise products, ``sum_k <A_k, B_k>``."""
    a, b = as_tensor(a), as_tensor(b)
    if a.shape != b.shape:
        raise ShapeMismatch(f"inner product needs equal shapes, got {a.shape} and {b.shape}")
    return float(np.sum(a.data * b.data))
