import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from maminda import psi as P
from maminda.errors import BranchCutHit, ParameterOutOfRange, UnknownSpec

SPECS = [P.janowski(1, -1), P.janowski(0.5, -0.5), P.janowski(0.8, 0.0), P.janowski(0.6, 0.3),
         P.alpha_halfplane(0.25), P.lemniscate(), P.lemniscate(0.5), P.cardioid(), P.sine(),
         P.sigmoid(), P.power_halfplane(0.5), P.crescent(), P.exp_lambda(0.7),
         P.janowski_power(0.6, -0.4, 0.5), P.janowski_power(1, -1, 0.5)]
IDS = [s.title for s in SPECS]


@pytest.mark.parametrize("spec", SPECS, ids=IDS)
def test_normalization_and_real_coefficients(spec):
    assert abs(P.psi_eval(spec, 0j) - 1) < 1e-14
    B = P.psi_taylor(spec, 12)
    assert B.dtype.kind == "f" and B[0] > 0


@pytest.mark.parametrize("spec", SPECS, ids=IDS)
def test_conjugate_symmetry(spec, rng):
    z = 0.9 * np.sqrt(rng.uniform(size=50)) * np.exp(2j * np.pi * rng.uniform(size=50))
    np.testing.assert_allclose(P.psi_values(spec, z.conj()), P.psi_values(spec, z).conj(), atol=1e-13)


@pytest.mark.parametrize("spec", SPECS, ids=IDS)
def test_taylor_matches_cauchy_formula(spec):
    B = P.psi_taylor(spec, 8)
    c = P.cauchy_coefficients(lambda z: P.psi_values(spec, z), 8, radius=0.4)
    np.testing.assert_allclose(B, c[1:].real, atol=1e-8)
    assert np.max(np.abs(c[1:].imag)) < 1e-8


@pytest.mark.parametrize("spec", SPECS, ids=IDS)
def test_image_points_are_inside(spec, rng):
    z = 0.95 * np.sqrt(rng.uniform(size=100)) * np.exp(2j * np.pi * rng.uniform(size=100))
    assert np.all(P.region_contains_many(spec, P.psi_values(spec, z)) == 1)


def test_taylor_closed_forms():
    np.testing.assert_allclose(P.psi_taylor(P.janowski(1, -1), 5), 2.0)
    np.testing.assert_allclose(P.psi_taylor(P.janowski(0.5, -0.3), 4), [0.8 * 0.3 ** k for k in range(4)])
    np.testing.assert_allclose(P.psi_taylor(P.cardioid(), 3), [1, 1, 0.5])
    np.testing.assert_allclose(P.psi_taylor(P.sine(), 3), [1, 0, -1 / 6], atol=1e-16)


def test_eval_examples():
    assert P.psi_eval(P.cardioid(), -1) == pytest.approx(1 - math.exp(-1), abs=1e-15)
    assert P.psi_eval(P.lemniscate(), 1.0) == pytest.approx(math.sqrt(2))
    th = 1.88438
    assert abs(abs(P.psi_eval(P.cardioid(), np.exp(1j * th))) - 0.372412) < 2e-4
    assert P.psi_eval(P.lemniscate(), -1.0) == 0
    assert P.psi_eval(P.sine(), 0.3).imag == 0.0


def test_eval_errors():
    with pytest.raises(BranchCutHit):
        P.psi_eval(P.janowski(1, -1), 1.0)
    with pytest.raises(ParameterOutOfRange):
        P.psi_eval(P.cardioid(), 1.5)


def test_make_psi_validation():
    assert P.make_psi("janowski", D=1, E=-1) == P.janowski(1, -1)
    assert P.make_psi("lemniscate").p("c", 1.0) == 1.0
    with pytest.raises(UnknownSpec):
        P.make_psi("nope")
    with pytest.raises(ParameterOutOfRange):
        P.make_psi("janowski", D=1)
    with pytest.raises(ParameterOutOfRange):
        P.make_psi("cardioid", alpha=0.2)
    with pytest.raises(ParameterOutOfRange):
        P.janowski(-0.5, 0.5)
    with pytest.raises(ParameterOutOfRange):
        P.power_halfplane(1.5)


def test_lemniscate_boundary_property():
    w = P.boundary_curve(P.lemniscate(), 4096)
    assert w.size == 4096
    assert np.max(np.abs(np.abs(w * w - 1) - 1)) < 1e-10


def test_cardioid_boundary_at_pi():
    w = P.boundary_curve(P.cardioid(), 4096)
    assert abs(w[2048] - (1 - math.exp(-1))) < 1e-14


def test_boundary_curve_unbounded_drops_pole():
    w = P.boundary_curve(P.janowski(1, -1), 256)
    assert w.size == 255 and np.all(np.isfinite(w))
    with pytest.raises(ValueError):
        P.boundary_curve(P.cardioid(), 32)


def test_region_examples():
    for spec in SPECS:
        assert P.region_contains(spec, 1.0).state is P.RegionState.Inside
    lem = P.lemniscate()
    assert P.region_contains(lem, 1.45).state is P.RegionState.Outside
    assert P.region_contains(lem, 1.40).state is P.RegionState.Inside
    # w = 0 lies on |w^2 - 1| = 1
    assert P.region_contains(lem, 0.0).state is P.RegionState.Indeterminate


def test_indeterminate_iff_margin_below_tolerance():
    spec = P.cardioid()
    w = P.psi_eval(spec, np.exp(0.7j))
    v = P.region_contains(spec, w)
    assert v.state is P.RegionState.Indeterminate and v.margin < P.BOUNDARY_TOL
    v = P.region_contains(spec, w * 1.01)
    assert v.state is not P.RegionState.Indeterminate and v.margin >= P.BOUNDARY_TOL


@pytest.mark.parametrize("spec", [P.janowski(1, -1), P.janowski(0.5, -0.5), P.janowski(0.6, 0.3),
                                  P.alpha_halfplane(0.3)], ids=lambda s: s.title)
def test_fast_path_agrees_with_generic_winding(spec, rng):
    t = 2 * np.pi * (np.arange(20000) + 0.5) / 20000
    curve = P.psi_values(spec, 0.99999 * np.exp(1j * t))
    w = rng.uniform(-3, 5, 1000) + 1j * rng.uniform(-4, 4, 1000)
    m = P.signed_margin(spec, w)
    inside_w, dist = P.generic_winding_contains(curve, w)
    keep = (np.abs(m) >= 1e-3) & (dist >= 1e-3) & (np.abs(w) < 50)
    assert keep.sum() > 500
    assert np.array_equal(inside_w[keep], (m > 0)[keep])


def test_cardioid_cusp_side():
    spec = P.cardioid()
    cusp = 1 - math.exp(-1)
    assert P.signed_margin(spec, np.array([cusp + 1e-4]), refine=True)[0] > 0
    assert P.signed_margin(spec, np.array([cusp - 1e-4]), refine=True)[0] < 0


@given(st.floats(0.05, 0.95), st.floats(0, 2 * math.pi))
def test_refined_margin_sign_near_boundary(r, th):
    spec = P.sine()
    w = P.psi_eval(spec, r * np.exp(1j * th))
    assert P.signed_margin(spec, np.array([w]), refine=True)[0] > 0


def test_custom_spec_flagged_unchecked():
    spec = P.custom(lambda z: 1 + 0.5 * z, "disk-half")
    assert not spec.checked
    assert P.region_contains(spec, 1.4).state is P.RegionState.Inside
    assert P.region_contains(spec, 1.6).state is P.RegionState.Outside
    np.testing.assert_allclose(P.psi_taylor(spec, 3), [0.5, 0, 0], atol=1e-12)


@pytest.mark.parametrize("spec", SPECS, ids=IDS)
def test_derivatives_match_finite_differences(spec):
    z = np.array([0.3 + 0.2j, -0.4 + 0.1j, 0.1 - 0.5j])
    h = 1e-6
    d1, d2 = P.psi_derivatives(spec, z)
    n1 = (P.psi_values(spec, z + h) - P.psi_values(spec, z - h)) / (2 * h)
    n2 = (P.psi_values(spec, z + h) - 2 * P.psi_values(spec, z) + P.psi_values(spec, z - h)) / h ** 2
    np.testing.assert_allclose(d1, n1, atol=1e-7)
    np.testing.assert_allclose(d2, n2, atol=1e-3)
