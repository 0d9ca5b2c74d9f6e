"""Shared 1-D numerics: extrema over a circle, bracketed roots, radius bisection."""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate, optimize

from .errors import (MaxIterationsExceeded, NoSignChange, PredicateNotMonotone,
                     QuadratureFailure)

GRID = 2048
THETA_TOL = 1e-10
# candidate cells refined besides those within `near` of the best grid value
EXTRA_CELLS = 4
# relative slack under which a grid endpoint wins a tie against a refined interior point
TIE_EPS = 1e-14


@dataclass(frozen=True)
class CircleExtremum:
    theta: float
    value: float
    r: float


@dataclass(frozen=True)
class RadiusResult:
    value: float
    bracket: tuple
    tolerance: float
    method: str
    cross_check: float | None = None
    notes: dict = field(default_factory=dict)

    def as_dict(self):
        return {"value": self.value, "bracket": list(self.bracket),
                "tolerance": self.tolerance, "method": self.method,
                "cross_check": self.cross_check, "notes": dict(self.notes)}


def _grid_values(obj, theta):
    vals = None
    try:
        vals = np.asarray(obj(theta), dtype=float)
    except (TypeError, ValueError):
        vals = None
    if vals is None or vals.shape != theta.shape:
        vals = np.array([float(obj(t)) for t in theta])
    return vals


def circle_extremum(obj, r: float, mode: str = "min", symmetric: bool = True,
                    grid: int = GRID, theta_tol: float = THETA_TOL,
                    near: float = 1e-9) -> CircleExtremum:
    """Global min or max of ``obj(theta)`` for theta on the circle |z| = r.

    ``obj`` may be vectorized (called once on the whole grid) or scalar.
    With ``symmetric`` the scan covers [0, pi] and both endpoints are grid
    points; otherwise [0, 2 pi) is scanned periodically.
    """
    if mode not in ("min", "max"):
        raise ValueError("mode must be 'min' or 'max'")
    sign = 1.0 if mode == "min" else -1.0
    if symmetric:
        theta = np.linspace(0.0, math.pi, grid)
    else:
        theta = np.linspace(0.0, 2 * math.pi, grid, endpoint=False)
    g = sign * _grid_values(obj, theta)
    g = np.where(np.isnan(g), np.inf, g)
    n = g.size

    if symmetric:
        left = np.concatenate(([np.inf], g[:-1]))
        right = np.concatenate((g[1:], [np.inf]))
    else:
        left, right = np.roll(g, 1), np.roll(g, -1)
    local = np.flatnonzero((g <= left) & (g <= right))
    if local.size == 0:
        local = np.array([int(np.argmin(g))])
    best = g[local].min()
    chosen = set(local[g[local] <= best + near].tolist())
    chosen.update(local[np.argsort(g[local])[:EXTRA_CELLS]].tolist())

    def f(t):
        return sign * float(obj(t))

    cands = []
    for i in sorted(chosen):
        cands.append((float(g[i]), float(theta[i]), True))
        if symmetric:
            a = theta[max(i - 1, 0)]
            b = theta[min(i + 1, n - 1)]
        else:
            step = 2 * math.pi / n
            a, b = theta[i] - step, theta[i] + step
        if b - a <= theta_tol:
            continue
        res = optimize.minimize_scalar(f, bounds=(a, b), method="bounded",
                                       options={"xatol": theta_tol, "maxiter": 500})
        if np.isfinite(res.fun):
            cands.append((float(res.fun), float(res.x), False))

    gbest = min(c[0] for c in cands)
    slack = TIE_EPS * max(1.0, abs(gbest))
    # exact grid points (notably the real-axis endpoints) win near-ties
    on_grid = [c for c in cands if c[2] and c[0] <= gbest + slack]
    val, th, _ = min(on_grid or cands, key=lambda c: c[0])
    if not symmetric:
        th = th % (2 * math.pi)
    return CircleExtremum(theta=th, value=float(obj(th)), r=r)


def find_root_bracketed(F, lo: float, hi: float, tol: float = 1e-12,
                        maxiter: int = 200) -> float:
    """Brent root of F on [lo, hi]; F(lo) and F(hi) must differ in sign."""
    flo, fhi = F(lo), F(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if not (np.isfinite(flo) and np.isfinite(fhi)) or flo * fhi > 0:
        raise NoSignChange(f"F({lo})={flo!r} and F({hi})={fhi!r} do not bracket a root")
    root, info = optimize.brentq(F, lo, hi, xtol=tol, rtol=4 * np.finfo(float).eps,
                                 maxiter=maxiter, full_output=True, disp=False)
    if not info.converged:
        raise MaxIterationsExceeded(f"brent did not converge in {maxiter} iterations")
    return float(root)


def radius_by_bisection(pred, lo: float, hi: float, tol: float = 1e-9,
                        validate: bool = True, scan_points: int = 16) -> RadiusResult:
    """Largest r in [lo, hi] for which the monotone predicate ``pred`` holds."""
    if validate:
        rs = np.linspace(lo, hi, scan_points)
        seen_false = False
        for r in rs:
            ok = bool(pred(r))
            if ok and seen_false:
                raise PredicateNotMonotone(f"predicate true at r={r} after a false sample")
            seen_false = seen_false or not ok
    if not pred(lo):
        raise NoSignChange(f"predicate false at the lower end r={lo}")
    if pred(hi):
        raise NoSignChange(f"predicate still true at the upper end r={hi}")
    a, b = lo, hi
    while b - a > tol:
        m = 0.5 * (a + b)
        if pred(m):
            a = m
        else:
            b = m
    return RadiusResult(value=0.5 * (a + b), bracket=(a, b), tolerance=tol, method="bisection")


def quad(fn, a: float, b: float, tol: float = 1e-12) -> float:
    """Adaptive quadrature of a smooth real integrand; raises QuadratureFailure."""
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            val, err = integrate.quad(fn, a, b, epsabs=tol, epsrel=tol, limit=400)
        except integrate.IntegrationWarning as exc:
            raise QuadratureFailure(str(exc)) from exc
    if not np.isfinite(val) or err > 1e3 * tol:
        raise QuadratureFailure(f"quadrature error estimate {err:.3g} exceeds tolerance")
    return float(val)
