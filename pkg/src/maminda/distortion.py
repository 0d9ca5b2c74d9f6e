"""Distortion bounds |f'(z)| for S*(psi) from the extremes of |psi| on circles."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .extremal import f0_at
from .numerics import circle_extremum
from .psi import PsiSpec, cardioid, psi_values

CARDIOID_TRANSITION = (3.0 - math.sqrt(5.0)) / 2.0


@dataclass(frozen=True)
class DistortionRow:
    r: float
    theta1: float
    min_mod: float
    lower: float
    upper: float
    theta2: float = 0.0
    max_mod: float = float("nan")

    def as_dict(self):
        return asdict(self)


def _modulus(spec, r):
    def obj(theta):
        return np.abs(psi_values(spec, r * np.exp(1j * np.asarray(theta))))
    return obj


def min_mod_psi(spec: PsiSpec, r: float):
    """(theta1, min |psi(r e^{i theta})|) with theta1 in [0, pi]."""
    if not 0.0 < r <= 1.0:
        raise ValueError(f"radius must lie in (0, 1], got {r}")
    ext = circle_extremum(_modulus(spec, r), r, mode="min", symmetric=True)
    return ext.theta, ext.value


def max_mod_psi(spec: PsiSpec, r: float):
    if not 0.0 < r <= 1.0:
        raise ValueError(f"radius must lie in (0, 1], got {r}")
    ext = circle_extremum(_modulus(spec, r), r, mode="max", symmetric=True)
    return ext.theta, ext.value


def distortion_row(spec: PsiSpec, r: float) -> DistortionRow:
    th1, lo = min_mod_psi(spec, r)
    th2, hi = max_mod_psi(spec, r)
    fm = f0_at(spec, -r).real
    fp = f0_at(spec, r).real
    return DistortionRow(r=r, theta1=th1, min_mod=lo, lower=lo * (-fm / r),
                         upper=(fp / r) * hi, theta2=th2, max_mod=hi)


def distortion_bounds(spec: PsiSpec, r: float):
    """(lower, upper) with lower <= |f'(z)| <= upper on |z| = r."""
    row = distortion_row(spec, r)
    return row.lower, row.upper


def distortion_table(spec: PsiSpec, radii) -> list:
    return [distortion_row(spec, float(r)) for r in radii]


def cardioid_mod_formula(r: float, theta: float):
    """|1 + z e^z| at z = r e^{i theta}, written out in real terms."""
    a = r * np.exp(r * np.cos(theta))
    return np.sqrt(1.0 + a * (a + 2.0 * np.cos(theta + r * np.sin(theta))))


def cardioid_table(radii=(1.0, 0.8, 2.0 / 3.0, 0.5)):
    return distortion_table(cardioid(), radii)
