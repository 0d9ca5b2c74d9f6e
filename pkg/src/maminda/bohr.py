"""Bohr radius of the class of functions subordinate to members of S*(psi)."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import NoSignChange, ParameterOutOfRange, TruncationNotConverged
from .extremal import build_extremal, koebe_radius, majorant_eval
from .numerics import find_root_bracketed
from .psi import PsiSpec, janowski

R_HI = 0.999
SCAN = 200
ORDERS = (64, 128, 256)


@dataclass(frozen=True)
class BohrResult:
    r_star: float
    r0: float
    r_b: float
    sharp_flag: bool
    notes: dict = field(default_factory=dict)

    def as_dict(self):
        return asdict(self)


def _first_root(F, hi=R_HI, scan=SCAN):
    """Least root of F on (0, hi): scan upward for the first sign change, then Brent."""
    rs = np.linspace(0.0, hi, scan + 1)
    prev_r, prev = rs[0], F(rs[0])
    for r in rs[1:]:
        v = F(r)
        if v == 0.0:
            return float(r)
        if prev * v < 0:
            return find_root_bracketed(F, prev_r, r, tol=1e-14)
        prev_r, prev = r, v
    raise NoSignChange(f"no root on (0, {hi})")


def bohr_radius(spec: PsiSpec, N: int = 64) -> BohrResult:
    if N < 32:
        raise ValueError("bohr_radius needs N >= 32")
    r_star = koebe_radius(spec)
    orders = [n for n in ORDERS if n >= N] or [N]
    err = None
    for n in orders:
        f0 = build_extremal(spec, n)
        try:
            r0 = _first_root(lambda r: majorant_eval(f0, r) - r_star)
        except (NoSignChange, TruncationNotConverged) as exc:
            err = exc
            continue
        t = f0.t[1:]
        positive = bool(np.all(t > 0))
        r_b = min(r0, 1.0 / 3.0)
        return BohrResult(r_star=r_star, r0=r0, r_b=r_b,
                          sharp_flag=bool(r_b == r0 and positive),
                          notes={"order": n, "t_positive": positive})
    raise err


def janowski_sharp_condition(D: float, E: float) -> bool:
    """Condition under which r0 <= 1/3 for the Janowski class."""
    if E == 0.0:
        return D >= 0.75 * math.log(3.0)
    p = (D - E) / E
    return 3.0 * (1.0 - E) ** p <= (1.0 + E / 3.0) ** p


def bohr_janowski(D: float, E: float) -> BohrResult:
    """Closed-form Janowski equations, cross-checked against the series majorant."""
    if not -1.0 <= E < D <= 1.0:
        raise ParameterOutOfRange(f"need -1 <= E < D <= 1, got D={D}, E={E}")
    if E == 0.0:
        r_star = math.exp(-D)

        def G(r):
            return 1.0 - r * math.exp(D * (1.0 + r))
    else:
        p = (D - E) / E
        r_star = (1.0 - E) ** p

        def G(r):
            return r_star - r * (1.0 + E * r) ** p
    r0 = _first_root(G)
    generic = bohr_radius(janowski(D, E))
    positive = generic.notes["t_positive"]
    r_b = min(r0, 1.0 / 3.0)
    return BohrResult(r_star=r_star, r0=r0, r_b=r_b,
                      sharp_flag=bool(r_b == r0 and positive),
                      notes={"condition": janowski_sharp_condition(D, E),
                             "t_positive": positive,
                             "series_r0": generic.r0,
                             "agreement": abs(generic.r0 - r0)})


def conjecture_roots():
    """Roots in (0,1) of r exp(e^r) = e^{1/e} and e^2 r exp(2 sqrt(1+r) - 2) = (1 + sqrt(1+r))^2."""
    card = find_root_bracketed(lambda r: r * math.exp(math.exp(r)) - math.exp(1.0 / math.e),
                               1e-9, 1.0, tol=1e-14)

    def lem(r):
        s = math.sqrt(1.0 + r)
        return math.e ** 2 * r * math.exp(2.0 * s - 2.0) - (1.0 + s) ** 2

    return card, find_root_bracketed(lem, 1e-9, 1.0, tol=1e-14)
