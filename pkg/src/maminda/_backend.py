"""Kernel selection.

The compiled ``_kernels`` extension is used when it imports; setting
``MAMINDA_PURE_PYTHON=1`` forces the numpy fallback.
"""
import os

import numpy as np

from . import _fallback

if os.environ.get("MAMINDA_PURE_PYTHON"):
    _compiled = None
else:
    try:
        from . import _kernels as _compiled
    except ImportError:
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"
_impl = _compiled if _compiled is not None else _fallback

# numpy already runs these as vectorized C loops (np.convolve, point-parallel
# Horner) and beats the compiled scalar loops; see benchmarks/bench_kernels.py
VECTORIZED = ("cauchy_mul", "horner")

_NAMES = ("cauchy_mul", "series_div", "series_exp", "series_log", "series_pow",
          "horner", "polyline_winding_distance")


def available():
    """Backends importable in this process."""
    return ("compiled", "python") if _compiled is not None else ("python",)


def module(name=None):
    """Kernel module for ``name`` ('compiled' or 'python'); default is the active one."""
    if name is None:
        return _impl
    if name == "python":
        return _fallback
    if name == "compiled" and _compiled is not None:
        return _compiled
    raise ValueError(f"kernel backend {name!r} not available")


def _c(x):
    return np.ascontiguousarray(x, dtype=np.complex128)


def _f(x):
    return np.ascontiguousarray(x, dtype=np.float64)


def cauchy_mul(a, b):
    return _fallback.cauchy_mul(_c(a), _c(b))


def series_div(a, b):
    return _impl.series_div(_c(a), _c(b))


def series_exp(a):
    return _impl.series_exp(_c(a))


def series_log(a):
    return _impl.series_log(_c(a))


def series_pow(a, alpha):
    return _impl.series_pow(_c(a), float(alpha))


def horner(c, z):
    z = np.asarray(z)
    out = _fallback.horner(_c(c), _c(z.ravel()))
    return out.reshape(z.shape)


def polyline_winding_distance(px, py, qx, qy):
    return _impl.polyline_winding_distance(_f(px), _f(py), _f(qx), _f(qy))
