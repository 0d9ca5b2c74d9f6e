# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops: series recurrences, Horner evaluation, polyline winding.

Every routine here has a numpy twin in ``_fallback`` with the same signature;
``_backend`` picks one at import time.
"""
import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt

cnp.import_array()


def cauchy_mul(const double complex[::1] a, const double complex[::1] b):
    # real arithmetic: C99 complex multiply goes through __muldc3 and is slow
    cdef Py_ssize_t n = a.shape[0], k, j
    out = np.zeros(n, dtype=np.complex128)
    cdef double complex[::1] c = out
    cdef const double[:, ::1] A = np.ascontiguousarray(np.asarray(a).view(np.float64).reshape(n, 2))
    cdef const double[:, ::1] B = np.ascontiguousarray(np.asarray(b).view(np.float64).reshape(n, 2))
    cdef double sr, si
    for k in range(n):
        sr = 0
        si = 0
        for j in range(k + 1):
            sr = sr + A[j, 0] * B[k - j, 0] - A[j, 1] * B[k - j, 1]
            si = si + A[j, 0] * B[k - j, 1] + A[j, 1] * B[k - j, 0]
        c[k] = sr + 1j * si
    return out


def series_div(const double complex[::1] a, const double complex[::1] b):
    cdef Py_ssize_t n = a.shape[0], k, j
    out = np.zeros(n, dtype=np.complex128)
    cdef double complex[::1] q = out
    cdef double complex s, b0 = b[0]
    for k in range(n):
        s = a[k]
        for j in range(1, k + 1):
            s = s - b[j] * q[k - j]
        q[k] = s / b0
    return out


def series_exp(const double complex[::1] a):
    cdef Py_ssize_t n = a.shape[0], m, k
    out = np.zeros(n, dtype=np.complex128)
    cdef double complex[::1] e = out
    cdef double complex s
    e[0] = 1
    for m in range(1, n):
        s = 0
        for k in range(1, m + 1):
            s = s + k * a[k] * e[m - k]
        e[m] = s / m
    return out


def series_log(const double complex[::1] a):
    cdef Py_ssize_t n = a.shape[0], m, k
    out = np.zeros(n, dtype=np.complex128)
    cdef double complex[::1] lg = out
    cdef double complex s
    for m in range(1, n):
        s = 0
        for k in range(1, m):
            s = s + k * lg[k] * a[m - k]
        lg[m] = a[m] - s / m
    return out


def series_pow(const double complex[::1] a, double alpha):
    cdef Py_ssize_t n = a.shape[0], m, k
    out = np.zeros(n, dtype=np.complex128)
    cdef double complex[::1] p = out
    cdef double complex s
    p[0] = 1
    for m in range(1, n):
        s = 0
        for k in range(1, m + 1):
            s = s + (alpha * k - (m - k)) * a[k] * p[m - k]
        p[m] = s / m
    return out


def horner(const double complex[::1] c, const double complex[::1] z):
    cdef Py_ssize_t n = c.shape[0], m = z.shape[0], i, k
    out = np.empty(m, dtype=np.complex128)
    cdef double complex[::1] v = out
    cdef const double[:, ::1] C = np.ascontiguousarray(np.asarray(c).view(np.float64).reshape(n, 2))
    cdef double ar, ai, t, zr, zi
    for i in range(m):
        zr = z[i].real
        zi = z[i].imag
        ar = 0
        ai = 0
        for k in range(n - 1, -1, -1):
            t = ar * zr - ai * zi + C[k, 0]
            ai = ar * zi + ai * zr + C[k, 1]
            ar = t
        v[i] = ar + 1j * ai
    return out


def polyline_winding_distance(const double[::1] px, const double[::1] py,
                              const double[::1] qx, const double[::1] qy):
    """Winding number of the closed polyline around each query point and the
    Euclidean distance from the point to the polyline."""
    cdef Py_ssize_t m = px.shape[0], nq = qx.shape[0], i, j, j1
    wind = np.zeros(nq, dtype=np.int64)
    dist = np.empty(nq, dtype=np.float64)
    cdef cnp.int64_t[::1] wn = wind
    cdef double[::1] dd = dist
    # per-segment data, computed once for all query points
    seg = np.empty((4, m), dtype=np.float64)
    cdef double[:, ::1] sg = seg
    cdef double x, y, ax, ay, by, ex, ey, t, dx, dy, d2, best, cross, l2
    cdef cnp.int64_t w
    for j in range(m):
        j1 = j + 1 if j + 1 < m else 0
        ex = px[j1] - px[j]
        ey = py[j1] - py[j]
        l2 = ex * ex + ey * ey
        sg[0, j] = ex
        sg[1, j] = ey
        sg[2, j] = 1.0 / l2 if l2 > 0 else 0.0
        sg[3, j] = py[j1]
    for i in range(nq):
        x = qx[i]
        y = qy[i]
        w = 0
        best = 1e300
        for j in range(m):
            ax = px[j]
            ay = py[j]
            ex = sg[0, j]
            ey = sg[1, j]
            by = sg[3, j]
            dx = x - ax
            dy = y - ay
            cross = ex * dy - dx * ey
            if ay <= y:
                if by > y and cross > 0:
                    w += 1
            elif by <= y and cross < 0:
                w -= 1
            t = (dx * ex + dy * ey) * sg[2, j]
            if t < 0:
                t = 0
            elif t > 1:
                t = 1
            dx = t * ex - dx
            dy = t * ey - dy
            d2 = dx * dx + dy * dy
            if d2 < best:
                best = d2
        wn[i] = w
        dd[i] = sqrt(best)
    return wind, dist
