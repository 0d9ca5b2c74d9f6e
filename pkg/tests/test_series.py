import numpy as np
import pytest
from hypothesis import given, strategies as st

from maminda import series as S
from maminda.errors import BadConstantTerm, DivisionByZeroConstantTerm


def ts(c):
    return S.TruncatedSeries(np.asarray(c, dtype=complex))


def rand_series(seed, n=33, scale=0.5, c0=None):
    r = np.random.default_rng(seed)
    c = (r.uniform(-1, 1, n) + 1j * r.uniform(-1, 1, n)) * scale / np.sqrt(2)
    if c0 is not None:
        c[0] = c0
    return ts(c)


def test_mul_difference_of_squares():
    out = ts([1, 1, 0, 0, 0]) * ts([1, -1, 0, 0, 0])
    np.testing.assert_allclose(out.coeffs, [1, 0, -1, 0, 0])


def test_div_geometric():
    out = ts([1, 0, 0, 0]) / ts([1, -1, 0, 0])
    np.testing.assert_allclose(out.coeffs, [1, 1, 1, 1])


def test_mul_gives_square_coefficients():
    num = ts([0, 1, 1, 0, 0, 0])
    den = S.power(ts([1, -1, 0, 0, 0, 0]), -3.0)
    np.testing.assert_allclose((num * den).coeffs, [0, 1, 4, 9, 16, 25], atol=1e-14)


def test_mixed_orders_truncate_to_minimum():
    out = ts([1, 2, 3]) + ts([1, 1, 1, 1, 1])
    assert out.order == 2


def test_div_by_zero_constant():
    with pytest.raises(DivisionByZeroConstantTerm):
        ts([1, 1]) / ts([0, 1])


def test_nonfinite_rejected():
    with pytest.raises(ValueError):
        ts([1, np.nan])


def test_exp_of_log_series():
    n = np.arange(6)
    a = np.where(n >= 1, 2.0 / np.maximum(n, 1), 0.0)
    np.testing.assert_allclose(S.exp(ts(a)).coeffs, [1, 2, 3, 4, 5, 6], atol=1e-14)


def test_pow_binomial():
    np.testing.assert_allclose(S.power(ts([1, -1, 0, 0]), -2.0).coeffs, [1, 2, 3, 4], atol=1e-14)


def test_transcendental_preconditions():
    with pytest.raises(BadConstantTerm):
        S.exp(ts([1, 1]))
    with pytest.raises(BadConstantTerm):
        S.log(ts([2, 1]))
    with pytest.raises(BadConstantTerm):
        S.power(ts([0, 1]), 0.5)


@given(st.integers(0, 2 ** 31))
def test_log_exp_roundtrip(seed):
    s = rand_series(seed, c0=0.0)
    np.testing.assert_allclose(S.log(S.exp(s)).coeffs, s.coeffs, atol=1e-12)


@given(st.integers(0, 2 ** 31))
def test_cauchy_commutes_and_associates(seed):
    a, b, c = (rand_series(seed + i) for i in range(3))
    np.testing.assert_allclose((a * b).coeffs, (b * a).coeffs, atol=1e-13)
    np.testing.assert_allclose(((a * b) * c).coeffs, (a * (b * c)).coeffs, atol=1e-13)


@given(st.integers(0, 2 ** 31), st.floats(-2.5, 2.5))
def test_pow_matches_exp_log(seed, alpha):
    a = rand_series(seed, scale=0.3, c0=1.0)
    np.testing.assert_allclose(S.power(a, alpha).coeffs, S.exp(alpha * S.log(a)).coeffs, atol=1e-11)


def test_calculus_examples():
    np.testing.assert_allclose(S.derive(ts([0, 1, 1])).coeffs, [1, 2])
    np.testing.assert_allclose(S.integrate(ts([1, 2])).coeffs, [0, 1, 1])
    assert S.derive(ts([3])).order == 0


@given(st.integers(0, 2 ** 31))
def test_derive_integrate_roundtrip(seed):
    a = rand_series(seed)
    np.testing.assert_allclose(S.derive(S.integrate(a)).coeffs, a.coeffs, atol=1e-15)


@given(st.integers(0, 2 ** 31))
def test_hadamard_identities(seed):
    f = rand_series(seed, c0=0.0)
    assert np.array_equal(S.hadamard(f, S.ones_kernel(f.order)).coeffs, f.coeffs)
    zf1 = np.concatenate([[0], S.derive(f).coeffs])
    np.testing.assert_allclose(S.hadamard(f, S.koebe(f.order)).coeffs, zf1, atol=1e-14)


def test_koebe_squared():
    np.testing.assert_allclose(S.hadamard(S.koebe(5), S.koebe(5)).coeffs, [0, 1, 4, 9, 16, 25])


def test_eval_examples():
    assert S.series_eval(ts([0, 1, 1]), 0.5) == pytest.approx(0.75)
    geo = S.TruncatedSeries(np.ones(65, dtype=complex))
    assert abs(S.series_eval(geo, 0.3) - 1 / 0.7) < 1e-12
    assert S.series_eval(ts([1]), 0.3 + 0.2j) == 1
