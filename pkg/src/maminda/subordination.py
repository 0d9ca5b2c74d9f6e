"""Sufficient condition for S*(psi) through f f''/(f')^2 subordinate to h.

Each h below is d/dz [z (1 - 1/psi(z))] for its paired psi, so that
(1/z) int_0^z h = (psi - 1)/psi holds exactly; the checks here evaluate the
hypotheses on sampled circles and are evidence, not proofs.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _backend
from .errors import EvaluatorSingularity, ParameterOutOfRange
from .numerics import find_root_bracketed
from .psi import (PsiSpec, alpha_halfplane, exp_lambda, janowski_power, lemniscate,
                  psi_values, region_contains_many)

BUL_BOUND = -0.5
BUL_SLACK = 1e-9
ANGLES = 512
GL_NODES = 64


@dataclass(frozen=True)
class HSpec:
    name: str
    params: tuple = ()

    def p(self, key):
        return dict(self.params)[key]

    @property
    def title(self):
        args = ",".join(f"{k}={v:g}" for k, v in self.params)
        return f"{self.name}({args})"

    def __call__(self, z):
        return h_eval(self, z)[0]

    @property
    def psi(self) -> PsiSpec:
        n = self.name
        if n == "janpower":
            return janowski_power(self.p("D"), self.p("E"), self.p("beta"))
        if n == "lemniscate_h":
            return lemniscate(self.p("c"))
        if n == "exp_h":
            return exp_lambda(self.p("lambda"))
        return alpha_halfplane(self.p("alpha"))


def janpower(D: float, E: float, beta: float) -> HSpec:
    if not (-1.0 <= E < D <= 1.0 and 0.0 < beta <= 1.0):
        raise ParameterOutOfRange(f"need -1 <= E < D <= 1 and 0 < beta <= 1, got {D}, {E}, {beta}")
    return HSpec("janpower", (("D", float(D)), ("E", float(E)), ("beta", float(beta))))


def lemniscate_h(c: float) -> HSpec:
    if not 0.0 < c <= 1.0:
        raise ParameterOutOfRange(f"c must lie in (0, 1], got {c}")
    return HSpec("lemniscate_h", (("c", float(c)),))


def exp_h(lam: float) -> HSpec:
    if not 0.0 < lam <= 1.0:
        raise ParameterOutOfRange(f"lambda must lie in (0, 1], got {lam}")
    return HSpec("exp_h", (("lambda", float(lam)),))


def alpha_h(alpha: float) -> HSpec:
    if not 0.0 <= alpha < 1.0:
        raise ParameterOutOfRange(f"alpha must lie in [0, 1), got {alpha}")
    return HSpec("alpha_h", (("alpha", float(alpha)),))


def h_eval(h: HSpec, z):
    """(h, h', h'') at z, vectorized."""
    z = np.asarray(z, dtype=np.complex128)
    n = h.name
    if n == "alpha_h":
        al = h.p("alpha")
        a = 1.0 - 2.0 * al
        u = 1.0 + a * z
        return (2 * (1 - al) * (a * z * z + 2 * z) / u ** 2,
                4 * (1 - al) / u ** 3,
                -12 * a * (1 - al) / u ** 4)
    if n == "lemniscate_h":
        c = h.p("c")
        s = 1.0 + c * z
        return (1.0 - 0.5 * (s ** -1.5 + s ** -0.5),
                0.25 * c * (3 * s ** -2.5 + s ** -1.5),
                0.25 * c * c * (-7.5 * s ** -3.5 - 1.5 * s ** -2.5))
    if n == "exp_h":
        lam = h.p("lambda")
        e = np.exp(-lam * z)
        return (1.0 - e * (1.0 - lam * z),
                lam * e * (2.0 - lam * z),
                -lam * lam * e * (3.0 - lam * z))
    if n == "janpower":
        D, E, b = h.p("D"), h.p("E"), h.p("beta")
        P = np.exp(b * (np.log(1 + E * z) - np.log(1 + D * z)))
        L = E / (1 + E * z) - D / (1 + D * z)
        dL = -E * E / (1 + E * z) ** 2 + D * D / (1 + D * z) ** 2
        P1 = b * P * L
        P2 = b * (P1 * L + P * dL)
        k = D + E - b * (D - E)
        N, N1, N2 = 1 + k * z + D * E * z * z, k + 2 * D * E * z, 2 * D * E
        M, M1, M2 = (1 + D * z) * (1 + E * z), D + E + 2 * D * E * z, 2 * D * E
        Q = N / M
        U = N1 * M - N * M1
        Q1 = U / M ** 2
        Q2 = ((N2 * M - N * M2) * M - 2 * U * M1) / M ** 3
        return 1.0 - P * Q, -(P1 * Q + P * Q1), -(P2 * Q + 2 * P1 * Q1 + P * Q2)
    raise ParameterOutOfRange(f"unknown h {n!r}")


# ------------------------------------------------------------- hypotheses

@dataclass(frozen=True)
class BulCheck:
    inf_value: float
    passed: bool
    argmin: complex
    denominator: str = "h_prime"


def bul_grid(r_max: float):
    radii = list(np.round(np.arange(0.1, r_max, 0.1), 10))
    if not radii or radii[-1] < r_max:
        radii.append(r_max)
    th = 2 * np.pi * np.arange(ANGLES) / ANGLES
    return np.asarray(radii)[:, None] * np.exp(1j * th)[None, :]


def check_bul_condition(h: HSpec, r_max: float = 0.999, denominator: str = "h_prime") -> BulCheck:
    """inf over the sample grid of Re(1 + z h''/h') (or z h''/h), compared with -1/2."""
    if r_max > 0.999:
        raise ParameterOutOfRange("r_max must not exceed 0.999")
    z = bul_grid(r_max)
    v, d1, d2 = h_eval(h, z)
    den = d1 if denominator == "h_prime" else v
    if np.min(np.abs(den)) < 1e-300:
        raise EvaluatorSingularity(f"{'h' if denominator == 'h' else h.title + chr(39)} vanishes on the grid")
    q = np.real(1.0 + z * d2 / den)
    i = np.unravel_index(np.argmin(q), q.shape)
    inf = float(q[i])
    return BulCheck(inf, inf > BUL_BOUND + BUL_SLACK, complex(z[i]), denominator)


def exp_h_real_value(lam: float) -> float:
    """Re(1 + z h''/h') for the exponential h at z = 1, where it is smallest."""
    return (2 - 4 * lam + lam * lam) / (2 - lam)


def averaged_h(h: HSpec, z, nodes: int = GL_NODES):
    """(1/z) int_0^z h(t) dt = int_0^1 h(s z) ds by Gauss-Legendre quadrature."""
    x, w = np.polynomial.legendre.leggauss(nodes)
    s = 0.5 * (x + 1.0)
    z = np.asarray(z, dtype=np.complex128)
    vals = h_eval(h, z[..., None] * s)[0]
    return 0.5 * np.sum(vals * w, axis=-1)


def averaged_target(h: HSpec, z):
    """(psi(z) - 1)/psi(z) for the paired psi."""
    with np.errstate(divide="ignore"):
        return 1.0 - 1.0 / psi_values(h.psi, z)


# ----------------------------------------------------------- subordination

class CurveRegion:
    """Image of the unit disk under a univalent function, via its boundary polyline."""

    def __init__(self, func, samples: int = 4096, boundary_tolerance: float = 1e-7):
        t = 2 * np.pi * np.arange(samples) / samples
        self.curve = np.asarray(func(np.exp(1j * t)), dtype=np.complex128)
        self.center = complex(np.asarray(func(np.array([0j])))[0])
        self.tol = boundary_tolerance

    def states(self, w):
        w = np.asarray(w, dtype=np.complex128).ravel()
        wind, dist = _backend.polyline_winding_distance(self.curve.real, self.curve.imag,
                                                        w.real, w.imag)
        return np.where(dist < self.tol, 0, np.where(wind != 0, 1, -1))


class PsiRegion:
    def __init__(self, spec: PsiSpec):
        self.spec = spec
        self.center = 1.0 + 0j

    def states(self, w):
        return region_contains_many(self.spec, np.asarray(w).ravel())


@dataclass(frozen=True)
class SubordinationVerdict:
    state: str                      # "Pass" | "Fail" | "Indeterminate"
    witness: complex | None = None
    samples: int = 0
    notes: dict = field(default_factory=dict)


def subordination_check(g, region, radii=(0.3, 0.6, 0.9), angles: int = ANGLES) -> SubordinationVerdict:
    """Necessary condition for g < f: g(0) = f(0) and g(|z| = r) inside f(D) on the grid."""
    if isinstance(region, PsiSpec):
        region = PsiRegion(region)
    g0 = complex(np.asarray(g(np.array([0j])))[0])
    if abs(g0 - region.center) > 1e-10:
        return SubordinationVerdict("Fail", 0j, 1, {"reason": "g(0) != f(0)"})
    th = 2 * np.pi * np.arange(angles) / angles
    z = (np.asarray(radii, dtype=float)[:, None] * np.exp(1j * th)[None, :]).ravel()
    st = region.states(g(z))
    if np.any(st < 0):
        return SubordinationVerdict("Fail", complex(z[np.flatnonzero(st < 0)[0]]), z.size)
    if np.any(st == 0):
        return SubordinationVerdict("Indeterminate", complex(z[np.flatnonzero(st == 0)[0]]), z.size)
    return SubordinationVerdict("Pass", None, z.size)


def p_condition(h: HSpec, psi: PsiSpec | None = None, radii=(0.3, 0.6, 0.9)) -> SubordinationVerdict:
    """(1/z) int_0^z h < (psi - 1)/psi, sampled.

    w -> 1/(1 - w) carries (psi - 1)/psi onto psi, so the test runs against psi(D),
    which also covers the unbounded regions."""
    psi = psi or h.psi
    return subordination_check(lambda z: 1.0 / (1.0 - averaged_h(h, z)), psi, radii)


def spot_check(h: HSpec, count: int = 10, seed: int = 0, radii=(0.3, 0.6, 0.9)):
    """Members built from the hypothesis: if 1 - f/(z f') = A(s z) with A the average
    of h and |s| <= 1, then f f''/(f')^2 = h(s z) and z f'/f = 1/(1 - A(s z)).
    Returns the number of constructed f whose z f'/f stays inside psi(D) on the grid."""
    rng = np.random.default_rng(seed)
    th = 2 * np.pi * np.arange(128) / 128
    z = (np.asarray(radii)[:, None] * np.exp(1j * th)[None, :]).ravel()
    ok = 0
    for _ in range(count):
        s = rng.uniform(0.2, 1.0) * np.exp(1j * rng.uniform(0, 2 * np.pi))
        q = 1.0 / (1.0 - averaged_h(h, s * z))
        ok += int(np.all(region_contains_many(h.psi, q) > 0))
    return ok, count


# -------------------------------------------------------------- constants

def c0_quartic(c: float) -> float:
    return 30.0 - 37.5 * c * c - 201.0 / 32.0 * c ** 4


def constant_c0() -> float:
    return find_root_bracketed(c0_quartic, 0.0, 1.0, tol=1e-15)


def constant_lambda0() -> float:
    return (9.0 - math.sqrt(33.0)) / 4.0
