"""Truncated complex power series.

A :class:`TruncatedSeries` holds the Taylor coefficients ``c[0..N]`` of an
analytic function at the origin. Binary operations on series of different
orders truncate to the smaller order; nothing is ever zero-padded.
"""
from __future__ import annotations

from dataclasses import dataclass
from numbers import Number

import numpy as np

from . import _backend
from .errors import BadConstantTerm, DivisionByZeroConstantTerm

DEFAULT_ORDER = 64


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    coeffs: np.ndarray
    # numpy scalars on the left must defer to our operators, not broadcast
    __array_ufunc__ = None

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=np.complex128).ravel()
        if c.size == 0:
            raise ValueError("a series needs at least the constant coefficient")
        if not np.all(np.isfinite(c)):
            raise ValueError("series coefficients must be finite")
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def __len__(self):
        return self.coeffs.size

    def __getitem__(self, k):
        return self.coeffs[k]

    def __repr__(self):
        return f"TruncatedSeries(order={self.order}, coeffs={np.round(self.coeffs[:6], 6)}...)"

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot raise the order of a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1])

    @property
    def real_coeffs(self) -> np.ndarray:
        return self.coeffs.real.copy()

    def __call__(self, z):
        return series_eval(self, z)

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, Number):
            c = np.zeros(self.order + 1, dtype=np.complex128)
            c[0] = other
            return TruncatedSeries(c)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else series_arith(self, other, "add")

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else series_arith(self, other, "sub")

    def __rsub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else series_arith(other, self, "sub")

    def __neg__(self):
        return TruncatedSeries(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Number):
            return TruncatedSeries(self.coeffs * other)
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else series_arith(self, other, "mul")

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Number):
            return TruncatedSeries(self.coeffs / other)
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else series_arith(self, other, "div")

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else series_arith(other, self, "div")

    def shift_down(self) -> "TruncatedSeries":
        """f(z)/z for a series with f(0) = 0 (order drops by one)."""
        if self.coeffs[0] != 0:
            raise BadConstantTerm("shift_down needs a zero constant term")
        return TruncatedSeries(self.coeffs[1:]) if self.order else TruncatedSeries([0.0])

    def shift_up(self) -> "TruncatedSeries":
        """z*f(z), keeping the order (the top coefficient is dropped)."""
        c = np.zeros_like(self.coeffs)
        c[1:] = self.coeffs[:-1]
        return TruncatedSeries(c)


def from_coeffs(coeffs) -> TruncatedSeries:
    return TruncatedSeries(coeffs)


def constant(value, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    c = np.zeros(order + 1, dtype=np.complex128)
    c[0] = value
    return TruncatedSeries(c)


def variable(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """The series of ``z``."""
    c = np.zeros(order + 1, dtype=np.complex128)
    if order >= 1:
        c[1] = 1.0
    return TruncatedSeries(c)


def _pair(a, b):
    n = min(a.order, b.order) + 1
    return a.coeffs[:n], b.coeffs[:n]


def series_arith(a: TruncatedSeries, b: TruncatedSeries, op: str) -> TruncatedSeries:
    x, y = _pair(a, b)
    if op == "add":
        return TruncatedSeries(x + y)
    if op == "sub":
        return TruncatedSeries(x - y)
    if op == "mul":
        return TruncatedSeries(_backend.cauchy_mul(x, y))
    if op == "div":
        if y[0] == 0:
            raise DivisionByZeroConstantTerm("divisor has zero constant term")
        return TruncatedSeries(_backend.series_div(x, y))
    raise ValueError(f"unknown series operation {op!r}")


def series_transcendental(a: TruncatedSeries, op: str, alpha: float | None = None) -> TruncatedSeries:
    c = a.coeffs
    if op == "exp":
        if c[0] != 0:
            raise BadConstantTerm("exp needs a zero constant term")
        return TruncatedSeries(_backend.series_exp(c))
    if op in ("log", "pow"):
        if c[0] != 1:
            raise BadConstantTerm(f"{op} needs constant term 1 (principal branch)")
        if op == "log":
            return TruncatedSeries(_backend.series_log(c))
        if alpha is None:
            raise ValueError("pow needs an exponent")
        return TruncatedSeries(_backend.series_pow(c, float(alpha)))
    raise ValueError(f"unknown transcendental operation {op!r}")


def exp(a):
    return series_transcendental(a, "exp")


def log(a):
    return series_transcendental(a, "log")


def power(a, alpha):
    return series_transcendental(a, "pow", alpha)


def series_calculus(a: TruncatedSeries, op: str) -> TruncatedSeries:
    c = a.coeffs
    if op == "derive":
        if a.order == 0:
            return TruncatedSeries([0.0])
        return TruncatedSeries(c[1:] * np.arange(1, c.size))
    if op == "integrate":
        out = np.zeros(c.size + 1, dtype=np.complex128)
        out[1:] = c / np.arange(1, c.size + 1)
        return TruncatedSeries(out)
    raise ValueError(f"unknown calculus operation {op!r}")


def derive(a):
    return series_calculus(a, "derive")


def integrate(a):
    return series_calculus(a, "integrate")


def hadamard(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    x, y = _pair(a, b)
    return TruncatedSeries(x * y)


def series_eval(a: TruncatedSeries, z):
    """Horner value of the truncated polynomial; accepts scalars or arrays."""
    if np.ndim(z) == 0:
        return complex(_backend.horner(a.coeffs, np.array([z]))[0])
    return _backend.horner(a.coeffs, np.asarray(z))


def ones_kernel(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """z/(1-z): the convolution identity on functions with f(0) = 0."""
    c = np.ones(order + 1, dtype=np.complex128)
    c[0] = 0.0
    return TruncatedSeries(c)


def koebe(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """z/(1-z)^2 = sum n z^n."""
    return TruncatedSeries(np.arange(order + 1, dtype=np.complex128))
