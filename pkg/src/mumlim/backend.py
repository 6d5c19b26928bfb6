"""Kernel backend selection.

At import time the compiled extension is preferred; the pure-Python twin is
the fallback. MUMLIM_PURE_PYTHON=1 forces the fallback. Callers must look
kernels up through this module (``backend.kernels.cauchy_mul(...)``) so that
``use()`` can swap backends for tests and benchmarks.
"""

import os

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

if _compiled is None or os.environ.get("MUMLIM_PURE_PYTHON"):
    kernels = _kernels_py
else:
    kernels = _compiled


def backend_name() -> str:
    return "compiled" if kernels is _compiled else "python"


def available_backends():
    names = ["python"]
    if _compiled is not None:
        names.insert(0, "compiled")
    return names


def use(name: str):
    """Switch kernel backend ("compiled" or "python"). Testing/benchmark hook."""
    global kernels
    if name == "python":
        kernels = _kernels_py
    elif name == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not available")
        kernels = _compiled
    else:
        raise ValueError(f"unknown backend {name!r}")
    return kernels
