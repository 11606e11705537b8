"""Backend selection for the group-table inner loops.

The compiled extension is used when it was built; otherwise the pure-Python
implementation is loaded.  Setting ``CMFIELDS_PURE_PYTHON=1`` forces the
fallback (used by the benchmark and the backend-equivalence tests).
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_py

BACKEND = "python"
compiled = None

if os.environ.get("CMFIELDS_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as compiled  # type: ignore[no-redef]
    except ImportError:  # extension not built
        compiled = None
    else:
        BACKEND = "cython"

_impl = compiled if compiled is not None else _kernels_py

closure = _impl.closure
conjugate_masks = _impl.conjugate_masks
left_coset_labels = _impl.left_coset_labels


def native(arr: np.ndarray):
    """Convert an int table to what the active backend indexes fastest."""
    return as_backend(arr, BACKEND)


def as_backend(arr: np.ndarray, backend: str):
    if backend == "cython":
        return np.ascontiguousarray(arr, dtype=np.intc)
    return arr.tolist()


def implementations() -> dict:
    """All importable backends by name, for benchmarking and cross-checks."""
    out = {"python": _kernels_py}
    if compiled is not None:
        out["cython"] = compiled
    return out
