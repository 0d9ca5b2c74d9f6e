import math
import time

import numpy as np
import pytest

from maminda import distortion as Dm
from maminda import psi as P
from maminda.extremal import f0_at


def test_table_rows():
    t0 = time.perf_counter()
    rows = Dm.cardioid_table()
    assert time.perf_counter() - t0 < 2.0
    want = [(1.88438, 0.372412, 0.197923), (2.01859, 0.527912, 0.304374),
            (2.17677, 0.611553, 0.375966), (2.58169, 0.693287, 0.467769)]
    for row, (th, mn, m) in zip(rows, want):
        assert abs(row.theta1 - th) < 1e-3
        assert abs(row.min_mod - mn) < 1e-4
        assert abs(row.lower - m) < 1e-4
        assert row.lower <= row.upper


def test_row_invariant_lower_is_min_times_growth():
    for row in Dm.cardioid_table():
        if row.r < 1:
            f = f0_at(P.cardioid(), -row.r).real
            assert abs(row.lower - row.min_mod * (-f / row.r)) < 1e-10


@pytest.mark.parametrize("r", [0.05, 0.2, 0.3, Dm.CARDIOID_TRANSITION])
def test_cardioid_below_transition(r):
    th, v = Dm.min_mod_psi(P.cardioid(), r)
    assert abs(th - math.pi) < 1e-6
    assert abs(v - (1 - r * math.exp(-r))) < 1e-10


def test_cardioid_transition_and_above():
    th, _ = Dm.min_mod_psi(P.cardioid(), Dm.CARDIOID_TRANSITION)
    assert th == math.pi
    th, _ = Dm.min_mod_psi(P.cardioid(), 0.5)
    assert th < math.pi - 0.1


def test_upper_bound_cardioid_half():
    lo, hi = Dm.distortion_bounds(P.cardioid(), 0.5)
    assert abs(lo - 0.467769) < 1e-4
    assert hi == pytest.approx(math.exp(math.exp(0.5) - 1) * (1 + 0.5 * math.exp(0.5)), abs=1e-10)


def test_koebe_distortion():
    lo, hi = Dm.distortion_bounds(P.janowski(1, -1), 0.5)
    assert lo == pytest.approx(0.5 / 1.5 ** 3, abs=1e-12)
    assert hi == pytest.approx(1.5 / 0.5 ** 3, abs=1e-10)


@pytest.mark.parametrize("spec", [P.cardioid(), P.lemniscate(), P.sine(), P.janowski(0.5, -0.5),
                                  P.crescent(), P.sigmoid()], ids=lambda s: s.title)
def test_small_radius_normalization(spec):
    lo, hi = Dm.distortion_bounds(spec, 1e-4)
    assert abs(lo - 1) < 1e-3 and abs(hi - 1) < 1e-3


@pytest.mark.parametrize("spec", [P.cardioid(), P.lemniscate(), P.sine(), P.janowski(0.5, -0.5),
                                  P.crescent(), P.sigmoid(), P.exp_lambda(0.5),
                                  P.janowski_power(0.6, -0.4, 0.5), P.power_halfplane(0.5)],
                         ids=lambda s: s.title)
@pytest.mark.parametrize("r", [0.25, 0.5, 0.75])
def test_lower_below_upper(spec, r):
    lo, hi = Dm.distortion_bounds(spec, r)
    assert lo <= hi


@pytest.mark.parametrize("r", [0.3, 0.6, 0.9])
def test_crescent_extremes_on_real_axis(r):
    spec = P.crescent()
    th1, _ = Dm.min_mod_psi(spec, r)
    th2, _ = Dm.max_mod_psi(spec, r)
    assert abs(th1 - math.pi) < 1e-6 and abs(th2) < 1e-6


@pytest.mark.parametrize("r", [0.3, 0.6])
def test_real_axis_extremes_give_f0_derivative(r):
    spec = P.crescent()
    row = Dm.distortion_row(spec, r)
    h = 1e-5
    d = lambda x: ((f0_at(spec, x + h) - f0_at(spec, x - h)) / (2 * h)).real
    assert abs(row.lower - d(-r)) < 1e-9
    assert abs(row.upper - d(r)) < 1e-9


def test_mod_formula():
    assert Dm.cardioid_mod_formula(1, 0) == pytest.approx(1 + math.e)
    assert Dm.cardioid_mod_formula(1, math.pi) == pytest.approx(1 - 1 / math.e)
    r = np.linspace(0, 1, 1000)
    th = np.linspace(0, 2 * np.pi, 1000)
    np.testing.assert_allclose(Dm.cardioid_mod_formula(r, th),
                               np.abs(P.psi_values(P.cardioid(), r * np.exp(1j * th))), atol=1e-12)


def test_radius_validation():
    with pytest.raises(ValueError):
        Dm.min_mod_psi(P.cardioid(), 1.2)
