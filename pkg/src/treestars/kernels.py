"""Kernel selection: compiled int64 DP when available and safe, else pure Python.

Set ``TREESTARS_PURE=1`` to force the pure-Python path.
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    if os.environ.get("TREESTARS_PURE"):
        raise ImportError("pure-Python kernels forced by TREESTARS_PURE")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"
# Counts on n vertices are < 2**n, so int64 is exact up to here.
C_MAX_N = 62


def _pick(n: int):
    if _ckernels is not None and n <= C_MAX_N:
        return _ckernels
    return _pykernels


def forest_counts(indptr, indices, alive=None) -> list[int]:
    return _pick(len(indptr) - 1).forest_counts(indptr, indices, alive)


def star_matrix(indptr, indices) -> list[list[int]]:
    return _pick(len(indptr) - 1).star_matrix(indptr, indices)
