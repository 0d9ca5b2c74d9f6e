import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from maminda import numerics as Nm
from maminda.errors import NoSignChange, PredicateNotMonotone, QuadratureFailure
from maminda.psi import cardioid, psi_values


def card_mod(r):
    return lambda th: np.abs(psi_values(cardioid(), r * np.exp(1j * np.asarray(th))))


def test_circle_extremum_examples():
    e = Nm.circle_extremum(lambda th: np.abs(1 + 0.5 * np.exp(1j * np.asarray(th))), 0.5)
    assert e.theta == pytest.approx(math.pi) and e.value == pytest.approx(0.5)
    e = Nm.circle_extremum(card_mod(1.0), 1.0)
    assert abs(e.theta - 1.88438) < 1e-3 and abs(e.value - 0.372412) < 2e-4
    e = Nm.circle_extremum(card_mod(0.3), 0.3)
    assert e.theta == math.pi
    assert abs(e.value - (1 - 0.3 * math.exp(-0.3))) < 1e-12


@given(st.floats(0.05, 1.0))
def test_min_below_max_and_symmetric_scan(r):
    obj = card_mod(r)
    lo = Nm.circle_extremum(obj, r, "min")
    hi = Nm.circle_extremum(obj, r, "max")
    assert lo.value <= hi.value
    full = Nm.circle_extremum(obj, r, "min", symmetric=False)
    assert abs(full.value - lo.value) < 1e-10
    assert abs(obj(lo.theta) - lo.value) < 1e-12


def test_scalar_objective_supported():
    e = Nm.circle_extremum(lambda th: math.cos(th), 1.0, "min", grid=64)
    assert e.value == pytest.approx(-1.0)


def test_find_root_examples():
    r = Nm.find_root_bracketed(lambda r: r * r - 6 * r + 1, 0, 1)
    assert r == pytest.approx(3 - 2 * math.sqrt(2), abs=1e-12)
    r = Nm.find_root_bracketed(lambda r: r * math.exp(math.exp(r)) - math.exp(1 / math.e), 0, 1)
    assert abs(r - 0.349681) < 1e-6
    assert Nm.find_root_bracketed(lambda r: r - 0.5, 0, 1) == pytest.approx(0.5)
    with pytest.raises(NoSignChange):
        Nm.find_root_bracketed(lambda r: r * r + 1, 0, 1)


@given(st.floats(-3, 3), st.floats(0.1, 5))
def test_root_residual_small(a, b):
    F = lambda x: math.atan(b * (x - a))
    x = Nm.find_root_bracketed(F, a - 4, a + 5)
    assert abs(F(x)) < 1e-10 * max(1.0, b)


def test_bisection_examples():
    res = Nm.radius_by_bisection(lambda r: r < 0.3, 0.0, 1.0)
    assert abs(res.value - 0.3) < 1e-9
    assert res.bracket[0] <= res.value <= res.bracket[1]
    assert res.bracket[1] - res.bracket[0] <= res.tolerance

    def pred(r):
        z = r * np.exp(1j * np.linspace(0, 2 * np.pi, 2001))
        return np.min(((1 + 4 * z + z * z) / (1 - z * z)).real) >= 0

    res = Nm.radius_by_bisection(pred, 0.01, 0.9)
    assert abs(res.value - (2 - math.sqrt(3))) < 1e-8
    assert pred(res.value - 1e-6) and not pred(res.value + 1e-6)

    koebe = lambda r: r / (1 - r) ** 2 <= 0.25
    res = Nm.radius_by_bisection(koebe, 0.0, 0.9)
    assert abs(res.value - (3 - 2 * math.sqrt(2))) < 1e-8


def test_bisection_detects_non_monotone():
    with pytest.raises(PredicateNotMonotone):
        Nm.radius_by_bisection(lambda r: r < 0.2 or r > 0.7, 0.0, 1.0)
    with pytest.raises(NoSignChange):
        Nm.radius_by_bisection(lambda r: True, 0.0, 1.0)


def test_quad():
    assert Nm.quad(math.exp, 0, 1) == pytest.approx(math.e - 1, abs=1e-13)
    with pytest.raises(QuadratureFailure):
        Nm.quad(lambda x: 1 / x if x > 0 else 0.0, 0, 1)
