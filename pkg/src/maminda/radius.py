"""Radius constants: F(z) = z(1+z)/(1-z)^3, H(z) = z/((1-qz)(1-z)), sections, convexity of psi.

Every numeric radius is the first zero of the continuous function
M(r) = min over |z| = r of the signed distance from the image point to the
boundary of psi(D). A bisection on the sign of M gives a bracket and Brent's
method polishes it against the refined (true-curve) distance.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import series as S
from .errors import NoSignChange, ParameterOutOfRange
from .numerics import RadiusResult, circle_extremum, find_root_bracketed, radius_by_bisection
from .psi import PsiSpec, psi_derivatives, region_kind, signed_margin

R_LO = 1e-6
R_HI = 1.0 - 1e-9
SCAN_STEPS = 64
# angles for the coarse sign scan; the polish uses the full circle_extremum grid
COARSE_GRID = 512


@dataclass(frozen=True)
class RadiusCase:
    family: str                 # "F_function" | "H_function" | "section"
    spec: PsiSpec | None = None
    q: float | None = None
    k: int | None = None
    closed_form: str | None = None

    def __post_init__(self):
        if self.family == "H_function" and not (self.q is not None and 0.0 < self.q < 1.0):
            raise ParameterOutOfRange(f"q must lie in (0, 1), got {self.q}")
        if self.family == "section" and not (self.k is not None and self.k >= 1):
            raise ParameterOutOfRange(f"k must be >= 1, got {self.k}")


# ------------------------------------------------------------ image maps

def zF_over_F(z):
    z = np.asarray(z, dtype=np.complex128)
    return (1.0 + 4.0 * z + z * z) / (1.0 - z * z)


def zH_over_H(z, q):
    z = np.asarray(z, dtype=np.complex128)
    return 1.0 + z / (1.0 - z) + q * z / (1.0 - q * z)


def section_poly(k: int) -> S.TruncatedSeries:
    """g_k(z) = z + z^2 + ... + z^k."""
    c = np.ones(k + 1)
    c[0] = 0.0
    return S.TruncatedSeries(c)


def section_maps(k: int):
    g = section_poly(k)
    d1 = S.derive(g)
    d2 = S.derive(d1) if d1.order else S.TruncatedSeries([0.0])

    def starlike(z):
        z = np.asarray(z, dtype=np.complex128)
        return z * S.series_eval(d1, z) / S.series_eval(g, z)

    def convex(z):
        z = np.asarray(z, dtype=np.complex128)
        return 1.0 + z * S.series_eval(d2, z) / S.series_eval(d1, z)

    return starlike, convex


# ------------------------------------------------------- margin on circles

def _circle_obj(spec, image, r):
    exact = region_kind(spec)[0] != "curve"

    def obj(theta):
        w = image(r * np.exp(1j * np.asarray(theta, dtype=float)))
        if np.ndim(theta) == 0:
            return float(signed_margin(spec, np.array([w]), refine=not exact)[0])
        return signed_margin(spec, w)
    return obj


def image_margin(spec: PsiSpec, image, r: float, refine: bool = True) -> float:
    """min over |z| = r of the signed distance of image(z) to the boundary of psi(D)."""
    if refine:
        return circle_extremum(_circle_obj(spec, image, r), r, mode="min").value
    th = np.linspace(0.0, math.pi, COARSE_GRID)
    return float(np.min(signed_margin(spec, image(r * np.exp(1j * th)))))


def _solve(M_fine, pred, lo=R_LO, hi=R_HI, notes=None) -> RadiusResult:
    notes = dict(notes or {})
    # The radius is the first failure going outward; a circle-wise predicate can
    # turn true again past a singularity (e.g. a zero of g'), so scan upward.
    rs = np.linspace(lo, hi, SCAN_STEPS)
    first = next((i for i, r in enumerate(rs) if not pred(r)), None)
    if first is None:
        notes["full_disk"] = True
        return RadiusResult(value=1.0, bracket=(hi, 1.0), tolerance=1.0 - hi,
                            method="bisection", notes=notes)
    if first == 0:
        raise NoSignChange(f"predicate already fails at r={lo}")
    coarse = radius_by_bisection(pred, rs[first - 1], rs[first], tol=1e-6)
    a, b = coarse.bracket
    a, b = max(lo, a - 1e-5), min(hi, b + 1e-5)
    try:
        root = find_root_bracketed(M_fine, a, b, tol=1e-13)
    except NoSignChange:
        notes["polish"] = "no sign change in refined margin; bisection bracket kept"
        return RadiusResult(coarse.value, coarse.bracket, coarse.tolerance, "bisection", notes=notes)
    eps = 1e-12
    return RadiusResult(value=root, bracket=(root - eps, root + eps), tolerance=2 * eps,
                        method="brent", notes=notes)


def image_radius(spec: PsiSpec, image, lo=R_LO, hi=R_HI, notes=None) -> RadiusResult:
    """Largest r with image(|z| < r) inside psi(D)."""
    return _solve(lambda r: image_margin(spec, image, r),
                  lambda r: image_margin(spec, image, r, refine=False) > 0,
                  lo, hi, notes)


# ------------------------------------------------------- convexity of psi

def psi_convexity_margin(spec: PsiSpec, r: float) -> float:
    """min over |z| = r of Re(1 + z psi''(z)/psi'(z))."""
    def obj(theta):
        z = r * np.exp(1j * np.asarray(theta, dtype=float))
        d1, d2 = psi_derivatives(spec, z)
        return np.real(1.0 + z * d2 / d1)
    return circle_extremum(obj, r, mode="min").value


def convexity_radius(spec: PsiSpec) -> RadiusResult:
    """Radius of convexity r_c of psi; 1 when psi(D) is convex."""
    M = lambda r: psi_convexity_margin(spec, r)
    return _solve(M, lambda r: M(r) > 0)


# ---------------------------------------------------------------- F radius

def F_radius(spec: PsiSpec) -> RadiusResult:
    raw = image_radius(spec, zF_over_F)
    closed = F_closed(spec)
    notes = dict(raw.notes)
    notes["image_radius"] = raw.value
    if spec.convexity_flag:
        return RadiusResult(raw.value, raw.bracket, raw.tolerance, raw.method,
                            cross_check=closed, notes=notes)
    rc = convexity_radius(spec)
    notes["r_c"] = rc.value
    if rc.value < raw.value:
        notes["capped_by"] = "r_c"
        return RadiusResult(rc.value, rc.bracket, rc.tolerance, rc.method,
                            cross_check=closed, notes=notes)
    return RadiusResult(raw.value, raw.bracket, raw.tolerance, raw.method,
                        cross_check=closed, notes=notes)


def F_closed(spec: PsiSpec):
    """Closed-form radius for the catalog entries that have one, else None."""
    n = spec.name
    if n == "alpha_halfplane" or (n == "janowski" and spec.p("E") == -1.0):
        a = spec.p("alpha") if n == "alpha_halfplane" else (1.0 - spec.p("D")) / 2.0
        return (2.0 - math.sqrt(3.0 + a * a)) / (1.0 + a)
    if n == "lemniscate" and spec.p("c", 1.0) == 1.0:
        return (math.sqrt(5.0) - 2.0) / (1.0 + math.sqrt(2.0))
    if n == "sigmoid":
        return _disk_root((math.e - 1.0) / (math.e + 1.0))
    if n == "power_halfplane":
        b = math.sin(math.pi * spec.p("gamma") / 2.0)
        return (2.0 - math.sqrt(4.0 - b * b)) / b
    if n == "cardioid":
        e = math.e
        return (2 * e - math.sqrt(4 * e * e - 2 * e + 1)) / (2 * e - 1)
    if n == "sine":
        return _disk_root(math.sin(1.0))
    return None


def _disk_root(b):
    """Root of 2r(2+r)/(1-r^2) = b."""
    return (math.sqrt(4.0 + b * (2.0 + b)) - 2.0) / (2.0 + b)


def F_sector_disk_radius(gamma: float) -> float:
    """Largest r with the disk |w - (1+r^2)/(1-r^2)| <= 4r/(1-r^2) inside |arg w| < pi gamma/2."""
    b = math.sin(math.pi * gamma / 2.0)
    M = lambda r: b * (1 + r * r) / (1 - r * r) - 4 * r / (1 - r * r)
    return find_root_bracketed(M, 1e-9, 1.0 - 1e-9)


def F_real_axis_bounds(r: float):
    """(min Re zF'/F, max |zF'/F - 1|) on |z| = r."""
    return (1 - 4 * r + r * r) / (1 - r * r), 2 * r * (2 + r) / (1 - r * r)


# ---------------------------------------------------------------- H radius

def H_radius(spec: PsiSpec, q: float) -> RadiusResult:
    if not 0.0 < q < 1.0:
        raise ParameterOutOfRange(f"q must lie in (0, 1), got {q}")
    closed = H_closed(spec, q)
    if spec.name == "alpha_halfplane" and spec.p("alpha") <= alpha_threshold(q):
        return RadiusResult(1.0, (1.0, 1.0), 0.0, "closed_form", cross_check=1.0,
                            notes={"threshold": alpha_threshold(q)})
    res = image_radius(spec, lambda z: zH_over_H(z, q))
    return RadiusResult(res.value, res.bracket, res.tolerance, res.method,
                        cross_check=closed, notes=res.notes)


def alpha_threshold(q: float) -> float:
    return (1.0 - q) / (2.0 * (1.0 + q))


def H_alpha_root(alpha: float, q: float, printed: bool = False) -> float:
    """Root of (1 - q r^2) = alpha (1+r)(1+qr); ``printed`` uses the discriminant as printed."""
    disc = alpha ** 2 * (1 - q * q) + 4 * q if printed else alpha ** 2 * (1 - q) ** 2 + 4 * q
    return (math.sqrt(disc) - alpha * (1 + q)) / (2 * q * (1 + alpha))


def H_alpha_bound(r: float, q: float) -> float:
    """min Re zH'/H on |z| = r."""
    return (1 - q * r * r) / ((1 + r) * (1 + q * r))


def H_disk_bound(r: float, q: float) -> float:
    """max |zH'/H - 1| on |z| = r."""
    return r * (1 + q - 2 * q * r) / ((1 - r) * (1 - q * r))


def H_closed(spec: PsiSpec, q: float):
    n = spec.name
    if n == "alpha_halfplane":
        a = spec.p("alpha")
        return 1.0 if a <= alpha_threshold(q) else min(1.0, H_alpha_root(a, q))
    if n == "lemniscate" and spec.p("c", 1.0) == 1.0:
        return ((1 + q) - math.sqrt(1 + q * q)) / (q * math.sqrt(2.0) * (math.sqrt(2.0) + 1))
    if n == "sigmoid":
        b = (math.e - 1) / (math.e + 1)
        s = (1 + q) * (1 + b)
        return (s - math.sqrt(s * s - 4 * b * q * (2 + b))) / (2 * q * (2 + b))
    return None


# ---------------------------------------------------------- sections / q

def section_radius(k: int, spec: PsiSpec | None = None, variant: str = "convexity") -> RadiusResult:
    if k < 1:
        raise ParameterOutOfRange(f"k must be >= 1, got {k}")
    if k == 1:
        return RadiusResult(1.0, (1.0, 1.0), 0.0, "closed_form", notes={"k": 1})
    star, conv = section_maps(k)
    if variant == "convexity":
        def M(r):
            obj = lambda th: np.real(conv(r * np.exp(1j * np.asarray(th, dtype=float))))
            return circle_extremum(obj, r, mode="min").value
        return _solve(M, lambda r: M(r) > 0, notes={"k": k})
    if variant == "starlike":
        if spec is None:
            raise ParameterOutOfRange("starlike section radius needs a psi")
        return image_radius(spec, star, notes={"k": k})
    raise ValueError(f"unknown variant {variant!r}")


def q_integer(n, q):
    n = np.asarray(n, dtype=float)
    return (1.0 - q ** n) / (1.0 - q)


def q_transform(f: S.TruncatedSeries, q: float) -> S.TruncatedSeries:
    """z d_q f(z) = z + sum [n]_q a_n z^n."""
    if not 0.0 < q < 1.0:
        raise ParameterOutOfRange(f"q must lie in (0, 1), got {q}")
    return S.TruncatedSeries(f.coeffs * q_integer(np.arange(f.order + 1), q))


def q_kernel(q: float, order: int) -> S.TruncatedSeries:
    """z/((1-qz)(1-z)) = sum [n]_q z^n."""
    c = q_integer(np.arange(order + 1), q)
    return S.TruncatedSeries(c)


def solve_case(case: RadiusCase) -> RadiusResult:
    if case.family == "F_function":
        return F_radius(case.spec)
    if case.family == "H_function":
        return H_radius(case.spec, case.q)
    if case.family == "section":
        variant = "starlike" if case.spec is not None else "convexity"
        return section_radius(case.k, case.spec, variant)
    raise ValueError(f"unknown family {case.family!r}")


def case_margin(case: RadiusCase, r: float) -> float:
    """The continuous margin whose first zero defines the radius of ``case``."""
    if case.family == "F_function":
        return image_margin(case.spec, zF_over_F, r)
    if case.family == "H_function":
        return image_margin(case.spec, lambda z: zH_over_H(z, case.q), r)
    star, conv = section_maps(case.k)
    if case.spec is None:
        obj = lambda th: np.real(conv(r * np.exp(1j * np.asarray(th, dtype=float))))
        return circle_extremum(obj, r, mode="min").value
    return image_margin(case.spec, star, r)
