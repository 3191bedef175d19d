"""Kernel selection: the compiled extension if it imports, else pure Python.

Set REFLEX_PURE_PYTHON=1 to force the fallback.
"""
from __future__ import annotations

import os
from collections import Counter

import numpy as np

from . import _fallback

BACKEND = "python"
_impl = _fallback
if not os.environ.get("REFLEX_PURE_PYTHON"):
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _fallback


def signature_codes(m: int, b: int, n: int, backend: str | None = None) -> np.ndarray:
    impl = {"python": _fallback, None: _impl}.get(backend)
    if impl is None:
        from . import _kernels as impl  # raises if unavailable
    return impl.signature_codes(m, b, n)


def decode_signature(code: int, m: int, n: int) -> tuple:
    B = (n + 1) * m
    parts = []
    for _ in range(n):
        code, x = divmod(code, B)
        if x:
            parts.append(divmod(x, m))
    return tuple(sorted(parts))


def monomial_signature_counts(m: int, b: int, n: int, backend: str | None = None) -> Counter:
    codes = signature_codes(m, b, n, backend)
    vals, cnts = np.unique(codes, return_counts=True)
    return Counter({decode_signature(int(v), m, n): int(c) for v, c in zip(vals, cnts)})


def alcove_counts(pair, refl, weights, heights, walls, L, cutoff, backend: str | None = None) -> np.ndarray:
    impl = {"python": _fallback, None: _impl}.get(backend)
    if impl is None:
        from . import _kernels as impl  # raises if unavailable
    return impl.alcove_counts(pair, refl, weights, heights, walls, L, cutoff)
