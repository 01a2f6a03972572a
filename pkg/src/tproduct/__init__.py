"""Third-order tensor algebra under the t-product.

The fast routines work slice by slice in the mode-3 Fourier domain and
only touch the first ``ceil((n3 + 1) / 2)`` frequencies, filling the rest by
conjugate symmetry. :mod:`tproduct.verification` holds slow reference
versions built from explicit block circulant matrices.
"""

from .core import (
    DEFAULT_TOL,
    SpectralTensor3,
    Tensor3,
    Tolerance,
    as_tensor,
    bcirc,
    bdiag,
    dft_mode3,
    fold,
    frobenius_norm,
    idft_mode3,
    inner_product,
    unfold,
)
from .errors import (
    InvalidTau,
    ParseError,
    ShapeMismatch,
    SingularTensor,
    SymmetryViolation,
    TensorError,
)
from .factorizations import (
    TQrFactors,
    TSvdFactors,
    singular_values,
    tqr,
    tsvd,
    tubal_rank,
    tubal_rank_from_tubes,
)
from .io import read_tensor, write_tensor
from .norms import prox_tnn, tnn, tsn
from .ops import is_fdiagonal, is_orthogonal, teye, tinv, tprod, tran

__version__ = "0.1.0"
