"""Convolution characterizations of S*(psi) and C(psi).

f lies in S*(psi) exactly when (1/z)(z f'(z) - w f(z)) never vanishes in the disk
for w on the boundary curve psi(e^{it}); for C(psi) the expression is
(z f')' - w f'. Both are Hadamard products of f with a kernel in z whose second
coefficient depends on w. The sampled tests here can certify failure with a
witness (z*, t*); a pass is evidence of membership on the grid, not a proof.

Conventions for the kernel parameter (with w = psi(e^{it})):
  direct  : kernel (z - lam_c z^2)/(1-z)^2 with lam_c = w/(w-1)
  printed : kernel (z - lam z^2)/(1-z)^2 with lam = w/(1-w)
The printed convention differs by a sign and is kept only for comparison.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import series as S
from .errors import BadConstantTerm, GridTooCoarse, ParameterOutOfRange
from .psi import PsiSpec, nearest_boundary_parameter, psi_values

DEFAULT_RADII = tuple(np.round(np.arange(1, 10) / 10.0, 1))
DEFAULT_ANGLES = 256
DEFAULT_T = 512
ZERO_TOL = 1e-9
MAX_CHORD = 0.05


@dataclass(frozen=True)
class KernelSample:
    t: float
    w: complex
    lam: complex

    @property
    def lam_direct(self):
        return lam_direct(self.w)


def lam_printed(w):
    w = np.asarray(w, dtype=np.complex128)
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(np.isinf(w), -1.0 + 0j, w / (1.0 - w))


def lam_direct(w):
    """w/(w-1), written as 1/(1 - 1/w) so that w = infinity maps to 1."""
    w = np.asarray(w, dtype=np.complex128)
    with np.errstate(divide="ignore", invalid="ignore"):
        return 1.0 / (1.0 - 1.0 / w)


def kernel_samples(spec: PsiSpec, t_grid) -> list:
    t_grid = np.asarray(t_grid, dtype=float)
    w = psi_values(spec, np.exp(1j * t_grid))
    lam = lam_printed(w)
    return [KernelSample(float(t), complex(a), complex(b)) for t, a, b in zip(t_grid, w, lam)]


def chordal(w1, w2):
    """Chordal distance on the Riemann sphere; finite for w = infinity."""
    w1 = np.asarray(w1, dtype=np.complex128)
    w2 = np.asarray(w2, dtype=np.complex128)
    with np.errstate(invalid="ignore", over="ignore"):
        d = 2 * np.abs(w1 - w2) / np.sqrt((1 + np.abs(w1) ** 2) * (1 + np.abs(w2) ** 2))
    inf1, inf2 = np.isinf(w1), np.isinf(w2)
    d = np.where(inf1 & ~inf2, 2 / np.sqrt(1 + np.abs(w2) ** 2), d)
    d = np.where(inf2 & ~inf1, 2 / np.sqrt(1 + np.abs(w1) ** 2), d)
    return np.where(inf1 & inf2, 0.0, d)


# ---------------------------------------------------------------- kernels

def kernel_coeffs(w: complex, order: int, variant: str = "starlike",
                  convention: str = "direct", normalized: bool = True) -> np.ndarray:
    """Coefficients 0..order of the convolution kernel for boundary value w."""
    n = np.arange(order + 1, dtype=float)
    if convention == "direct":
        if normalized:
            lc = complex(lam_direct(w))
            c = n - lc * (n - 1)
        else:
            c = n - w
    elif convention == "printed":
        c = n - complex(lam_printed(w)) * (n - 1)
    else:
        raise ValueError(f"unknown convention {convention!r}")
    c = np.asarray(c, dtype=np.complex128)
    if variant == "convex":
        c = c * n
    elif variant != "starlike":
        raise ValueError(f"unknown variant {variant!r}")
    c[0] = 0.0
    return c


def kernel_series(w, order, variant="starlike", convention="direct", normalized=True):
    return S.TruncatedSeries(kernel_coeffs(w, order, variant, convention, normalized))


def kernel_form(f: S.TruncatedSeries, w, z, variant="starlike", convention="direct",
                normalized=True):
    """(1/z) (f * K_w)(z) evaluated through the Hadamard product."""
    h = S.hadamard(f, kernel_series(w, f.order, variant, convention, normalized))
    return S.series_eval(h.shift_down(), z)


def direct_form(f: S.TruncatedSeries, w, z, variant="starlike"):
    """(1/z)(z f' - w f) or (z f')' - w f', evaluated from f and its derivatives."""
    d1 = S.derive(f)
    if variant == "starlike":
        g = d1 - w * f.shift_down().truncate(d1.order)
    elif variant == "convex":
        g = S.derive(S.hadamard(f, S.koebe(f.order))) - w * d1
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return S.series_eval(g, z)


def janowski_kernel(D: float, E: float, zeta: complex, variant: str = "starlike",
                    form: str = "printed", order: int = 16):
    """Janowski kernel for |zeta| = 1 as (evaluator, truncated series).

    printed : (z + (zeta+D)/(D-E) z^2)/(1-z)^2, convex (z + ((3D-E)+2 zeta)/(D-E) z^2)/(1-z)^3
    direct  : (z - (zeta+D)/(D-E) z^2)/(1-z)^2, convex (z - ((D+E)+2 zeta)/(D-E) z^2)/(1-z)^3
    """
    if not -1.0 <= E < D <= 1.0:
        raise ParameterOutOfRange(f"need -1 <= E < D <= 1, got D={D}, E={E}")
    if abs(abs(zeta) - 1.0) > 1e-12:
        raise ParameterOutOfRange("zeta must lie on the unit circle")
    if variant == "starlike":
        b = (zeta + D) / (D - E) if form == "printed" else -(zeta + D) / (D - E)
        p = 2
    elif variant == "convex":
        b = ((3 * D - E) + 2 * zeta) / (D - E) if form == "printed" else -((D + E) + 2 * zeta) / (D - E)
        p = 3
    else:
        raise ValueError(f"unknown variant {variant!r}")
    if form not in ("printed", "direct"):
        raise ValueError(f"unknown form {form!r}")

    def evaluate(z):
        z = np.asarray(z, dtype=np.complex128)
        return (z + b * z * z) / (1.0 - z) ** p

    x = S.variable(order)
    ser = (x + b * x * x) / S.power(1.0 - x, float(p))
    return evaluate, ser


# ------------------------------------------------------------ verdicts

@dataclass(frozen=True)
class NonvanishingVerdict:
    passed: bool
    witness: tuple | None
    min_abs: float
    windings: int
    notes: dict = field(default_factory=dict)

    def as_dict(self):
        return {"passed": self.passed,
                "witness": None if self.witness is None else
                {"z": [self.witness[0].real, self.witness[0].imag], "t": self.witness[1],
                 "abs_value": self.witness[2]},
                "min_abs": self.min_abs, "windings": self.windings, "notes": dict(self.notes)}


def _grids(z_grid, t_grid):
    if z_grid is None:
        th = 2 * np.pi * np.arange(DEFAULT_ANGLES) / DEFAULT_ANGLES
        z_grid = np.asarray(DEFAULT_RADII)[:, None] * np.exp(1j * th)[None, :]
    z_grid = np.atleast_2d(np.asarray(z_grid, dtype=np.complex128))
    if t_grid is None:
        t_grid = 2 * np.pi * np.arange(DEFAULT_T) / DEFAULT_T
    return z_grid, np.asarray(t_grid, dtype=float)


def _check_t_grid(spec, t_grid):
    w = psi_values(spec, np.exp(1j * t_grid))
    gaps = chordal(w, np.roll(w, -1))
    if np.max(gaps) > MAX_CHORD:
        j = int(np.argmax(gaps))
        raise GridTooCoarse(f"boundary samples {j} and {j + 1} are {gaps[j]:.3g} apart (chordal); refine t_grid")
    return w


def _nonvanishing(f, spec, z_grid, t_grid, variant):
    if abs(f.coeffs[0]) > 1e-14 or abs(f.coeffs[1] - 1.0) > 1e-12:
        raise BadConstantTerm("f must be normalized: f(0) = 0, f'(0) = 1")
    z_grid, t_grid = _grids(z_grid, t_grid)
    w = _check_t_grid(spec, t_grid)
    d1 = S.derive(f)
    if variant == "starlike":
        base = f.shift_down().truncate(d1.order)   # f/z
        top = d1                                    # f'
    else:
        base = d1                                   # f'
        top = S.derive(S.hadamard(f, S.koebe(f.order)))   # (z f')'
    B = S.series_eval(base, z_grid)
    T = S.series_eval(top, z_grid)
    if np.min(np.abs(B)) < ZERO_TOL:
        i = np.unravel_index(np.argmin(np.abs(B)), B.shape)
        what = "f(z)/z" if variant == "starlike" else "f'(z)"
        raise BadConstantTerm(f"{what} vanishes near z = {z_grid[i]} on the test grid")

    best = (np.inf, None, None)
    wind_total = 0
    first = None
    finite = np.isfinite(w)
    for k, (t, wk) in enumerate(zip(t_grid, w)):
        # w = infinity: the kernel reduces to -f/z (or -f'), nonzero by the precondition
        if not finite[k]:
            continue
        G = T - wk * B
        a = np.abs(G)
        i = np.unravel_index(np.argmin(a), a.shape)
        if a[i] < best[0]:
            best = (float(a[i]), complex(z_grid[i]), float(t))
        ratio = np.roll(G, -1, axis=1) / G
        winds = np.rint(np.sum(np.angle(ratio), axis=1) / (2 * np.pi)).astype(int)
        if np.any(winds != 0):
            wind_total += 1
            if first is None:
                ring = int(np.flatnonzero(winds != 0)[0])
                first = (k, ring)
    if best[0] < ZERO_TOL:
        return NonvanishingVerdict(False, (best[1], best[2], best[0]), best[0], wind_total,
                                   {"source": "grid"})
    if first is None:
        return NonvanishingVerdict(True, None, best[0], 0, {"samples": int(z_grid.size * t_grid.size)})
    k, ring = first
    g = top - complex(w[k]) * base
    zstar = _locate_zero(g, z_grid[: ring + 1].ravel(), float(np.max(np.abs(z_grid[ring]))))
    val = abs(S.series_eval(g, zstar))
    tstar = float(t_grid[k])
    q = S.series_eval(top, zstar) / S.series_eval(base, zstar)
    if np.isfinite(q):
        try:
            tstar = nearest_boundary_parameter(spec, q)
        except ValueError:
            pass
    return NonvanishingVerdict(False, (zstar, tstar, float(val)), best[0], wind_total,
                               {"source": "argument principle"})


def _locate_zero(g, starts, rmax, iters=60):
    """Newton on the polynomial g from the grid points where |g| is smallest."""
    dg = S.derive(g)
    vals = np.abs(S.series_eval(g, starts))
    best_z, best_v = starts[int(np.argmin(vals))], np.inf
    for z in starts[np.argsort(vals)[:8]]:
        for _ in range(iters):
            gz = S.series_eval(g, z)
            dz = S.series_eval(dg, z)
            if dz == 0:
                break
            step = gz / dz
            z = z - step
            if abs(z) > 1.0 or abs(step) < 1e-15:
                break
        v = abs(S.series_eval(g, z))
        if abs(z) <= rmax + 1e-12 and v < best_v:
            best_z, best_v = z, v
    return complex(best_z)


def starlike_nonvanishing(f: S.TruncatedSeries, spec: PsiSpec, z_grid=None, t_grid=None):
    return _nonvanishing(f, spec, z_grid, t_grid, "starlike")


def convex_nonvanishing(f: S.TruncatedSeries, spec: PsiSpec, z_grid=None, t_grid=None):
    return _nonvanishing(f, spec, z_grid, t_grid, "convex")


# ---------------------------------------------------- coefficient tests

def coeff_sufficiency(a, spec: PsiSpec, variant: str = "starlike", convention: str = "direct",
                      t_grid=None) -> float:
    """sup_t sum_{k>=2} weight_k(t) |a_k|; a value below 1 certifies membership.

    ``a`` lists a_2, a_3, ... ; weight_k = |k - lam(t)(k-1)| (times k for convex).
    """
    a = np.abs(np.asarray(a, dtype=np.complex128))
    if a.size == 0:
        return 0.0
    if t_grid is None:
        t_grid = 2 * np.pi * np.arange(4096) / 4096
    w = psi_values(spec, np.exp(1j * np.asarray(t_grid)))
    lam = lam_direct(w) if convention == "direct" else lam_printed(w)
    k = np.arange(2, a.size + 2, dtype=float)
    wt = np.abs(k[None, :] - lam[:, None] * (k[None, :] - 1))
    if variant == "convex":
        wt = wt * k[None, :]
    return float(np.max(wt @ a))


def janowski_weights(D: float, E: float, k, variant: str = "starlike"):
    """Weights of the Janowski coefficient condition as printed."""
    k = np.asarray(k, dtype=float)
    w = (1 + abs(D)) / (D - E) + (1 + abs(D) - E + D) / (D - E) * k
    return w * k if variant == "convex" else w


def janowski_sufficiency_margin(a, D: float, E: float, variant: str = "starlike") -> float:
    a = np.abs(np.asarray(a, dtype=np.complex128))
    k = np.arange(2, a.size + 2)
    return float(np.sum(janowski_weights(D, E, k, variant) * a))


def poly(coeffs) -> S.TruncatedSeries:
    """Normalized polynomial z + a_2 z^2 + ... from [a_2, a_3, ...]."""
    c = np.zeros(len(coeffs) + 2, dtype=np.complex128)
    c[1] = 1.0
    c[2:] = coeffs
    return S.TruncatedSeries(c)
