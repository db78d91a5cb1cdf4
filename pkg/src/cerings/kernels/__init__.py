"""Hot enumeration kernels with two interchangeable backends.

Every structure computation that walks ring elements (radical membership,
essentiality witnesses, idempotent search, the quasi-identity probe) funnels
through the functions re-exported here.  Two implementations exist:

* ``numba_backend`` — the default; tight @njit loops.
* ``numpy_backend`` — vectorized pure-numpy batches; used automatically when
  numba is not importable, or on request.

Selection is controlled by the ``CERINGS_BACKEND`` environment variable:
``auto`` (default), ``numba``, or ``numpy``.  Both backends implement the
same scan order (element index = base-p digits, most significant digit
first, so ascending index is ascending lexicographic coordinate order) and
therefore return identical results, witnesses included.

Elements of a dimension-d algebra over F_p are addressed by an integer
index in [0, p**d); ``decode_index``/``encode_vector`` convert between the
index and the coordinate row.
"""

from __future__ import annotations

import importlib
import os

import numpy as np

_VALID = ("auto", "numba", "numpy")


def _select() -> tuple[object, str]:
    choice = os.environ.get("CERINGS_BACKEND", "auto").lower()
    if choice not in _VALID:
        raise ValueError(
            f"CERINGS_BACKEND must be one of {_VALID}, got {choice!r}")
    if choice in ("auto", "numba"):
        try:
            from . import numba_backend
            return numba_backend, "numba"
        except ImportError:
            if choice == "numba":
                raise
    from . import numpy_backend
    return numpy_backend, "numpy"


_impl, BACKEND = _select()

assoc_violation = _impl.assoc_violation
radical_scan = _impl.radical_scan
ce_scan = _impl.ce_scan
idempotent_mask = _impl.idempotent_mask
nonunit_outside_scan = _impl.nonunit_outside_scan
quasi_probe_scan = _impl.quasi_probe_scan


def get_backend(name: str):
    """Load a backend module by name regardless of the ambient selection."""
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    return importlib.import_module(f"{__name__}.{name}_backend")


def decode_index(idx: int, p: int, dim: int) -> np.ndarray:
    """Coordinate row of the element with the given index."""
    out = np.zeros(dim, dtype=np.int64)
    for k in range(dim - 1, -1, -1):
        out[k] = idx % p
        idx //= p
    return out


def encode_vector(v, p: int) -> int:
    idx = 0
    for x in np.asarray(v, dtype=np.int64):
        idx = idx * p + int(x)
    return idx
