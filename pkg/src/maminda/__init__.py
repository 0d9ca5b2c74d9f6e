"""Numerical toolkit for Ma-Minda starlike classes S*(psi).

Truncated power series, a catalog of generators psi with region tests,
extremal functions, convolution membership tests, radius, distortion and Bohr
computations, and the f f''/(f')^2 subordination criterion.
"""
__version__ = "0.1.0"

from ._backend import BACKEND
from .errors import MamindaError
from .psi import CATALOG, PsiSpec, make_psi, psi_values, region_contains

__all__ = ["BACKEND", "CATALOG", "MamindaError", "PsiSpec", "make_psi", "psi_values",
           "region_contains", "__version__"]
