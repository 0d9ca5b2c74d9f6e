import numpy as np
import pytest
from hypothesis import given, strategies as st

from maminda import convolution as C
from maminda import psi as P
from maminda import series as S
from maminda.acceptance import membership_by_region, random_polynomials
from maminda.errors import BadConstantTerm, GridTooCoarse, ParameterOutOfRange

HALF = P.janowski(1, -1)


def test_koebe_passes():
    v = C.starlike_nonvanishing(S.koebe(400), HALF)
    assert v.passed and v.witness is None


def test_small_perturbation_passes_cardioid():
    f = C.poly([0.05])
    assert C.starlike_nonvanishing(f, P.cardioid()).passed
    assert membership_by_region(f, P.cardioid())[0]


def test_non_starlike_fails_with_witness():
    f = C.poly([0.9])
    v = C.starlike_nonvanishing(f, HALF)
    assert not v.passed
    z, t, val = v.witness
    assert abs(z) < 1 and val < 1e-9
    w = complex(P.psi_values(HALF, np.exp(1j * t)))
    assert abs(C.direct_form(f, w, z)) < 1e-6


def test_convex_examples():
    assert C.convex_nonvanishing(C.poly([]), P.cardioid()).passed
    assert C.convex_nonvanishing(C.poly([]), HALF).passed
    assert C.convex_nonvanishing(S.ones_kernel(300), HALF).passed
    v = C.convex_nonvanishing(C.poly([0.6]), HALF)
    assert not v.passed and v.witness is not None


def test_preconditions():
    with pytest.raises(BadConstantTerm):
        C.starlike_nonvanishing(S.TruncatedSeries(np.array([0, 2, 1], dtype=complex)), HALF)
    with pytest.raises(GridTooCoarse):
        C.starlike_nonvanishing(C.poly([0.1]), P.cardioid(), t_grid=np.linspace(0, 2 * np.pi, 16, endpoint=False))


@given(st.integers(0, 2 ** 31))
def test_direct_form_matches_kernel(seed):
    r = np.random.default_rng(seed)
    f = C.poly((r.normal(size=8) + 1j * r.normal(size=8)) * 0.3)
    w = complex(r.normal(), r.normal())
    z = 0.8 * r.uniform(size=8) * np.exp(2j * np.pi * r.uniform(size=8))
    for variant in ("starlike", "convex"):
        d = C.direct_form(f, w, z, variant)
        np.testing.assert_allclose(C.kernel_form(f, w, z, variant, normalized=False), d, atol=1e-11)
        # normalized kernel differs by the factor 1 - w
        np.testing.assert_allclose((1 - w) * C.kernel_form(f, w, z, variant), d, atol=1e-11)


def test_kernel_second_coefficient_sign():
    """Unnormalized kernel ((1-w)z + w z^2)/(1-z)^2 has coefficients n - w."""
    w = 0.3 + 0.8j
    x = S.variable(12)
    ker = ((1 - w) * x + w * x * x) / S.power(1.0 - x, -2.0).__rtruediv__(1.0)
    np.testing.assert_allclose(ker.coeffs[1:], np.arange(1, 13) - w, atol=1e-13)
    np.testing.assert_allclose(C.kernel_coeffs(w, 12, normalized=False)[1:], np.arange(1, 13) - w)


def test_printed_lambda_breaks_koebe():
    """With lambda = w/(1-w) the kernel expression vanishes inside the disk for the Koebe function."""
    s = 1.0
    w = 1j * s
    lam = complex(C.lam_printed(w))
    z = 1 / (2 * lam - 1)
    assert abs(z) < 1
    assert abs(C.kernel_form(S.koebe(400), w, z, convention="printed")) < 1e-10
    assert abs(C.kernel_form(S.koebe(400), w, z, convention="direct")) > 0.1


def test_membership_agreement():
    rng = np.random.default_rng(5)
    spec = P.janowski(0.5, -0.5)
    for f in random_polynomials(spec, 20, rng):
        assert C.starlike_nonvanishing(f, spec).passed == membership_by_region(f, spec)[0]


def test_sufficiency_implies_membership():
    rng = np.random.default_rng(6)
    spec = P.cardioid()
    n = 0
    while n < 50:
        a = (rng.normal(size=3) + 1j * rng.normal(size=3)) * rng.uniform(0.01, 0.15)
        if C.coeff_sufficiency(a, spec) >= 1:
            continue
        n += 1
        assert C.starlike_nonvanishing(C.poly(a), spec).passed


@given(st.integers(0, 2 ** 31), st.floats(0.01, 5))
def test_sufficiency_homogeneous(seed, s):
    r = np.random.default_rng(seed)
    a = r.normal(size=5) + 1j * r.normal(size=5)
    spec = P.sine()
    assert C.coeff_sufficiency(s * a, spec) == pytest.approx(s * C.coeff_sufficiency(a, spec), rel=1e-12)


def test_sufficiency_examples():
    assert C.coeff_sufficiency([], P.cardioid()) == 0.0
    assert C.coeff_sufficiency([0, 0, 0], P.cardioid()) == 0.0
    assert C.janowski_weights(1, 0, 2) == pytest.approx(8.0)
    assert C.janowski_sufficiency_margin([1 / 8 - 1e-9], 1, 0) < 1
    assert C.janowski_sufficiency_margin([1 / 8 + 1e-9], 1, 0) > 1
    # the worst-case direct weight for janowski(1,0) at k=2 is |2 - lam| maximized: 4
    assert C.coeff_sufficiency([0.5], P.janowski(1, 0)) == pytest.approx(1.0, abs=1e-6)


def test_janowski_kernels():
    ev, ser = C.janowski_kernel(1, -1, 1.0)
    np.testing.assert_allclose(ser.coeffs[:5], [0, 1, 3, 5, 7])
    assert ev(0.3) == pytest.approx((0.3 + 0.09) / 0.49)
    ev, ser = C.janowski_kernel(1, 0, -1.0)
    np.testing.assert_allclose(ser.coeffs[:5], [0, 1, 2, 3, 4])
    with pytest.raises(ParameterOutOfRange):
        C.janowski_kernel(1, -1, 0.5)


@pytest.mark.parametrize("D,E", [(1, -1), (0.5, -0.5), (0.8, 0.2)])
def test_direct_janowski_kernel_matches_w_form(D, E):
    """(z - (zeta+D)/(D-E) z^2)/(1-z)^2 is the normalized direct kernel at w = psi(conj zeta)."""
    for zeta in np.exp(1j * np.array([0.4, 1.9, 3.0])):
        zc = np.conj(zeta)
        w = (1 + D * zc) / (1 + E * zc)
        _, ser = C.janowski_kernel(D, E, zeta, form="direct", order=12)
        np.testing.assert_allclose(ser.coeffs, C.kernel_coeffs(w, 12), atol=1e-12)
        _, ser = C.janowski_kernel(D, E, zeta, "convex", form="direct", order=12)
        np.testing.assert_allclose(ser.coeffs, C.kernel_coeffs(w, 12, "convex"), atol=1e-12)


def test_kernel_samples():
    ks = C.kernel_samples(P.cardioid(), [0.5, 2.0])
    assert ks[0].w == pytest.approx(complex(P.psi_eval(P.cardioid(), np.exp(0.5j))))
    assert ks[0].lam == pytest.approx(ks[0].w / (1 - ks[0].w))
    assert ks[0].lam_direct == pytest.approx(ks[0].w / (ks[0].w - 1))
