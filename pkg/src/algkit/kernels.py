"""Exact integer matrix products with a compiled fast path.

The compiled kernel works in int64 and reports overflow; the fallback
multiplies numpy object arrays of Python ints, which never overflow.
Set ALGKIT_PURE_PYTHON=1 to force the fallback and ALGKIT_THREADS to
choose the kernel's thread count.
"""

from __future__ import annotations

import os

import numpy as np

try:
    if os.environ.get("ALGKIT_PURE_PYTHON"):
        raise ImportError("pure python requested")
    from . import _kernels
except ImportError:  # pragma: no cover - depends on the build
    _kernels = None

BACKEND = "compiled" if _kernels is not None else "python"

_I64_MAX = 2**63 - 1


def threads() -> int:
    raw = os.environ.get("ALGKIT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _fits_i64(a: np.ndarray) -> bool:
    if a.size == 0:
        return True
    if a.dtype != object:
        return True
    return max(abs(int(a.max())), abs(int(a.min()))) <= _I64_MAX


def matmul_python(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.dot(a.astype(object), b.astype(object))


def matmul_compiled(a: np.ndarray, b: np.ndarray):
    """int64 product or None when the inputs or any partial sum do not fit."""
    if _kernels is None or not (_fits_i64(a) and _fits_i64(b)):
        return None
    a64 = np.ascontiguousarray(a, dtype=np.int64)
    b64 = np.ascontiguousarray(b, dtype=np.int64)
    return _kernels.matmul_i64(a64, b64, threads())


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact product of two 2-d integer arrays, returned as an object array."""
    if a.shape[0] == 0 or b.shape[1] == 0 or a.shape[1] == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=object)
    out = matmul_compiled(a, b)
    if out is not None:
        return out.astype(object)
    return matmul_python(a, b)
