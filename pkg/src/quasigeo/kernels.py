"""Kernel selection.

The compiled extension is used when it imports; setting
``QUASIGEO_PURE_PYTHON=1`` forces the numpy fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

BACKEND = "python"
trace_batch = _kernels_py.trace_batch

if os.environ.get("QUASIGEO_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # pragma: no cover - depends on the build
        _compiled = None
    if _compiled is not None:
        trace_batch = _compiled.trace_batch
        BACKEND = "cython"

TERM_LENGTH = _kernels_py.TERM_LENGTH
TERM_VERTEX = _kernels_py.TERM_VERTEX
TERM_STEPS = _kernels_py.TERM_STEPS

__all__ = ["trace_batch", "BACKEND", "TERM_LENGTH", "TERM_VERTEX", "TERM_STEPS"]
