"""TNS3 binary tensor files.

Layout, all little-endian::

    offset  size  field
    0       4     magic b"TNS3"
    4       4     version, uint32 (= 1)
    8       24    n1, n2, n3, uint64 each
    32      8*N   float64 payload, N = n1*n2*n3, in Tensor3 storage order
"""

from __future__ import annotations

import os
import struct

import numpy as np

from .core import Tensor3, as_tensor
from .errors import ParseError

__all__ = ["MAGIC", "VERSION", "read_tensor", "write_tensor", "encode", "decode"]

MAGIC = b"TNS3"
VERSION = 1
_HEADER = struct.Struct("<4sIQQQ")


def encode(a) -> bytes:
    a = as_tensor(a)
    header = _HEADER.pack(MAGIC, VERSION, *a.shape)
    return header + a.ravel().astype("<f8").tobytes()


def decode(buf: bytes) -> Tensor3:
    if len(buf) < _HEADER.size:
        raise ParseError(f"truncated header: {len(buf)} bytes, need {_HEADER.size}")
    magic, version, n1, n2, n3 = _HEADER.unpack_from(buf)
    if magic != MAGIC:
        raise ParseError(f"bad magic {magic!r}, expected {MAGIC!r}")
    if version != VERSION:
        raise ParseError(f"unsupported version {version}, expected {VERSION}")
    if min(n1, n2, n3) < 1:
        raise ParseError(f"dimensions must be positive, got {(n1, n2, n3)}")
    count = n1 * n2 * n3
    payload = len(buf) - _HEADER.size
    if payload != 8 * count:
        kind = "truncated" if payload < 8 * count else "oversized"
        raise ParseError(
            f"{kind} payload: header declares {n1}x{n2}x{n3} ({8 * count} bytes), "
            f"found {payload} bytes"
        )
    flat = np.frombuffer(buf, dtype="<f8", offset=_HEADER.size, count=count)
    if not np.all(np.isfinite(flat)):
        raise ParseError("payload contains non-finite values")
    return Tensor3(flat.astype(np.float64).reshape((n1, n2, n3), order="F"))


def read_tensor(path: str | os.PathLike) -> Tensor3:
    """Read one tensor. Raises :class:`ParseError` or :class:`OSError`."""
    with open(path, "rb") as fh:
        return decode(fh.read())


def write_tensor(path: str | os.PathLike, a) -> None:
    with open(path, "wb") as fh:
        fh.write(encode(a))
