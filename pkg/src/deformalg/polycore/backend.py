"""Kernel backend selection.

DEFORMALG_BACKEND=numpy forces the pure-numpy path; anything else (or
unset) uses the numba kernels when numba is importable.  The benchmark
script compares the two on the same workload.
"""

from __future__ import annotations

import os

from . import _kernels_py

_FORCED = os.environ.get("DEFORMALG_BACKEND", "").strip().lower()

if _FORCED == "numpy":
    _impl = _kernels_py
    BACKEND_NAME = "numpy"
else:
    try:
        from . import _kernels_nb as _impl  # noqa: F401

        BACKEND_NAME = "numba"
    except ImportError:  # pragma: no cover - numba is a declared dependency
        _impl = _kernels_py
        BACKEND_NAME = "numpy"

merge = _impl.merge
normal_form = _impl.normal_form


def get_backend(name: str | None = None):
    """Return (merge, normal_form, label) for an explicit backend choice."""
    if name == "numpy":
        return _kernels_py.merge, _kernels_py.normal_form, "numpy"
    if name == "numba":
        from . import _kernels_nb

        return _kernels_nb.merge, _kernels_nb.normal_form, "numba"
    return merge, normal_form, BACKEND_NAME
