"""Backend selection for the search kernels.

The compiled extension is used when it imported successfully, unless the
environment variable ``COVERPEBBLE_KERNELS=python`` forces the pure-Python
twin.  Calls whose numbers would not fit in 64 bits always go to Python.
"""

import os

from . import _pykernels
from ._pykernels import EXHAUSTED, FOUND, STATE_LIMIT, TIME_LIMIT, rank  # noqa: F401

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_INT64_SAFE = 1 << 62

if _ckernels is not None and os.environ.get("COVERPEBBLE_KERNELS", "").lower() != "python":
    BACKEND = "cython"
    _fast = _ckernels
else:
    BACKEND = "python"
    _fast = _pykernels


def fits_int64(n: int, pebbles: int, diameter: int) -> bool:
    if (pebbles + 1) ** n >= _INT64_SAFE:
        return False
    return (pebbles + 1) << diameter < _INT64_SAFE


def search(n, arcs, coef, wvals, w, d, prune, max_states, max_seconds, backend=None):
    mod = _pick(backend)
    if mod is _ckernels:
        big = max(sum(d), sum(w))
        diam = max(c.bit_length() - 1 for row in coef for c in row)
        if not fits_int64(n, big, diam):
            mod = _pykernels
    return mod.search(n, arcs, coef, wvals, w, d, prune, max_states, max_seconds or 0.0)


def cover_table(n, arcs, w, T, backend=None):
    mod = _pick(backend)
    if mod is _ckernels and not fits_int64(n, T, 0):
        mod = _pykernels
    return mod.cover_table(n, arcs, w, T)


def _pick(backend):
    if backend is None:
        return _fast
    if backend == "python":
        return _pykernels
    if backend == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not available")
        return _ckernels
    raise ValueError(f"unknown backend {backend!r}")


def available_backends():
    return ["python"] + (["cython"] if _ckernels is not None else [])
