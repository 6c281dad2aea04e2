"""Pick the compiled kernels when available, the pure-Python ones otherwise."""

import os

from . import _kernels_py

if os.environ.get("HANKELTENSOR_PURE_PYTHON"):
    kernels = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels
        BACKEND = "cython"
    except ImportError:
        kernels = _kernels_py
        BACKEND = "python"

__all__ = ["kernels", "BACKEND"]
