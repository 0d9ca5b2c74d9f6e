"""Extremal function f0(z) = z exp(int_0^z (psi(t)-1)/t dt), Koebe radius, majorant."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import numerics
from . import series as S
from .errors import ParameterOutOfRange, TruncationNotConverged
from .psi import PsiSpec, psi_taylor, psi_values

MAJORANT_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class ExtremalFunction:
    series: S.TruncatedSeries
    spec: PsiSpec
    closed_form: str | None = None

    @property
    def order(self):
        return self.series.order

    @property
    def t(self):
        """Real coefficients t_0..t_N (t_0 = 0, t_1 = 1)."""
        return self.series.coeffs.real.copy()

    def __call__(self, z):
        return f0_value(self, z)


def closed_form_tag(spec: PsiSpec):
    n = spec.name
    if n == "janowski":
        return "koebe" if (spec.p("D"), spec.p("E")) == (1.0, -1.0) else "janowski"
    if n == "alpha_halfplane":
        return "koebe" if spec.p("alpha") == 0.0 else "alpha"
    if n == "cardioid":
        return "cardioid"
    if n == "lemniscate" and spec.p("c", 1.0) == 1.0:
        return "lemniscate"
    return None


def build_extremal(spec: PsiSpec, N: int = S.DEFAULT_ORDER) -> ExtremalFunction:
    if N < 8:
        raise ValueError("extremal series needs N >= 8")
    return _build(spec, int(N))


@lru_cache(maxsize=128)
def _build(spec, N):
    B = psi_taylor(spec, N - 1)
    logpart = np.zeros(N, dtype=np.complex128)
    logpart[1:] = B / np.arange(1, N)
    e = S.exp(S.TruncatedSeries(logpart))
    c = np.zeros(N + 1, dtype=np.complex128)
    c[1:] = e.coeffs.real
    return ExtremalFunction(S.TruncatedSeries(c), spec, closed_form_tag(spec))


def _janowski_DE(spec):
    if spec.name == "janowski":
        return spec.p("D"), spec.p("E")
    return 1.0 - 2.0 * spec.p("alpha"), -1.0


def f0_closed(spec: PsiSpec, z):
    """Closed-form f0 where one is known, else None."""
    tag = closed_form_tag(spec)
    z = np.asarray(z, dtype=np.complex128)
    if tag in ("janowski", "koebe", "alpha"):
        D, E = _janowski_DE(spec)
        if E == 0.0:
            return z * np.exp(D * z)
        return z * np.exp((D - E) / E * np.log(1.0 + E * z))
    if tag == "cardioid":
        return z * np.exp(np.exp(z) - 1.0)
    if tag == "lemniscate":
        s = np.sqrt(1.0 + z)
        return z * np.exp(2.0 * s - 2.0) * 4.0 / (1.0 + s) ** 2
    return None


def f0_value(f0: ExtremalFunction, z):
    """f0(z): closed form when tagged, else the series checked against order 2N."""
    scalar = np.ndim(z) == 0
    out = f0_closed(f0.spec, z)
    if out is None:
        out = f0.series(np.asarray(z))
        twice = build_extremal(f0.spec, 2 * f0.order).series(np.asarray(z))
        if np.max(np.abs(out - twice)) >= MAJORANT_TOL:
            raise TruncationNotConverged(f"f0 series at order {f0.order} not converged at |z|={np.max(np.abs(z))}")
        out = twice
    return complex(out) if scalar else out


def koebe_radius_closed(spec: PsiSpec):
    tag = closed_form_tag(spec)
    if tag in ("janowski", "koebe", "alpha"):
        D, E = _janowski_DE(spec)
        return math.exp(-D) if E == 0.0 else (1.0 - E) ** ((D - E) / E)
    if tag == "cardioid":
        return math.exp(1.0 / math.e - 1.0)
    if tag == "lemniscate":
        return 4.0 / math.e ** 2
    return None


def koebe_radius_quad(spec: PsiSpec) -> float:
    b1 = float(psi_taylor(spec, 1)[0])

    def integrand(u):
        if u < 1e-8:
            return -b1
        return (complex(psi_values(spec, np.array([-u]))[0]).real - 1.0) / u

    return math.exp(numerics.quad(integrand, 0.0, 1.0))


def koebe_radius(spec: PsiSpec) -> float:
    """r* = -f0(-1) = exp(int_0^1 (psi(-u)-1)/u du)."""
    v = koebe_radius_closed(spec)
    return v if v is not None else koebe_radius_quad(spec)


def majorant_eval(f0: ExtremalFunction, r: float) -> float:
    """hat f0(r) = sum |t_n| r^n, certified against the order-2N partial sum."""
    if not 0.0 <= r < 1.0:
        raise ParameterOutOfRange(f"majorant needs 0 <= r < 1, got {r}")
    if r == 0.0:
        return 0.0
    a = _majorant_sum(np.abs(f0.t), r)
    b = _majorant_sum(np.abs(build_extremal(f0.spec, 2 * f0.order).t), r)
    if abs(a - b) >= MAJORANT_TOL:
        raise TruncationNotConverged(f"majorant at order {f0.order} differs by {abs(a - b):.3g} at r={r}")
    return b


def _majorant_sum(c, r):
    return float(np.polynomial.polynomial.polyval(r, c))


def defining_identity_residual(f0: ExtremalFunction) -> float:
    """max |coeff of z f0'/f0 - psi| up to order N-2."""
    f = f0.series
    # f0' / (f0/z) = z f0'/f0
    ratio = S.derive(f) / f.shift_down()
    N = ratio.order
    psi = np.zeros(N + 1)
    psi[0] = 1.0
    psi[1:] = psi_taylor(f0.spec, N)
    k = min(N, f.order - 2) + 1
    return float(np.max(np.abs(ratio.coeffs[:k] - psi[:k])))


# -- Janowski coefficients, correct product form and the form as printed ---------

def janowski_tn(D: float, E: float, n: int) -> float:
    """t_n of z(1+Ez)^((D-E)/E): prod_{k=2}^{n} (D-(k-1)E) / (n-1)!."""
    if n < 1:
        raise ValueError("n >= 1")
    p = 1.0
    for k in range(2, n + 1):
        p *= D - (k - 1) * E
    return p / math.factorial(n - 1)


def janowski_tn_printed(D: float, E: float, n: int, terms: int = 60) -> float:
    """The printed product prod_{k=2}^{inf} (D-(k-1)E)/(k-1)!, truncated; n does not enter."""
    p = 1.0
    for k in range(2, terms + 1):
        p *= (D - (k - 1) * E) / math.factorial(k - 1)
    return p


def f0_at(spec: PsiSpec, z, orders=(64, 128, 256, 512)):
    """f0(z) with automatic order escalation for specs without a closed form."""
    last = None
    for N in orders:
        try:
            return f0_value(build_extremal(spec, N), z)
        except TruncationNotConverged as exc:
            last = exc
    raise last
