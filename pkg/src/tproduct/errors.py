"""Exception hierarchy shared by the library and the CLI."""


class TensorError(Exception):
    """Base class for all errors raised by :mod:`tproduct`."""


class ShapeMismatch(TensorError, ValueError):
    """Operand dimensions are incompatible with the requested operation."""


class SymmetryViolation(TensorError, ValueError):
    """A spectrum is not conjugate symmetric along mode 3, so it has no real preimage."""


class SingularTensor(TensorError, ArithmeticError):
    """Some Fourier-domain frontal slice is singular to working precision."""


class InvalidTau(TensorError, ValueError):
    pass


class ParseError(TensorError, ValueError):
    """A TNS3 file is malformed (bad magic, bad version, bad dims, or wrong payload size)."""
