"""Pure numpy implementations of the compiled kernels (same signatures)."""
import numpy as np

# query points processed per block in the polyline routine; bounds peak memory
_BLOCK = 256


def cauchy_mul(a, b):
    return np.convolve(a, b)[: len(a)]


def series_div(a, b):
    n = len(a)
    q = np.zeros(n, dtype=np.complex128)
    b0 = b[0]
    for k in range(n):
        q[k] = (a[k] - np.dot(b[1:k + 1], q[k - 1::-1][:k])) / b0
    return q


def series_exp(a):
    n = len(a)
    e = np.zeros(n, dtype=np.complex128)
    e[0] = 1.0
    ka = np.arange(n) * a
    for m in range(1, n):
        e[m] = np.dot(ka[1:m + 1], e[m - 1::-1]) / m
    return e


def series_log(a):
    n = len(a)
    lg = np.zeros(n, dtype=np.complex128)
    k = np.arange(n)
    for m in range(1, n):
        s = np.dot(k[1:m] * lg[1:m], a[m - 1:0:-1]) if m > 1 else 0.0
        lg[m] = a[m] - s / m
    return lg


def series_pow(a, alpha):
    n = len(a)
    p = np.zeros(n, dtype=np.complex128)
    p[0] = 1.0
    for m in range(1, n):
        k = np.arange(1, m + 1)
        p[m] = np.sum((alpha * k - (m - k)) * a[1:m + 1] * p[m - 1::-1]) / m
    return p


def horner(c, z):
    z = np.asarray(z, dtype=np.complex128)
    acc = np.zeros_like(z)
    for ck in c[::-1]:
        acc = acc * z + ck
    return acc


def polyline_winding_distance(px, py, qx, qy):
    ax, ay = px, py
    bx, by = np.roll(px, -1), np.roll(py, -1)
    ex, ey = bx - ax, by - ay
    len2 = ex * ex + ey * ey
    safe = np.where(len2 > 0, len2, 1.0)
    wind = np.empty(len(qx), dtype=np.int64)
    dist = np.empty(len(qx), dtype=np.float64)
    for s in range(0, len(qx), _BLOCK):
        x = qx[s:s + _BLOCK, None]
        y = qy[s:s + _BLOCK, None]
        cross = ex * (y - ay) - (x - ax) * ey
        up = (ay <= y) & (by > y) & (cross > 0)
        down = (ay > y) & (by <= y) & (cross < 0)
        wind[s:s + _BLOCK] = up.sum(axis=1) - down.sum(axis=1)
        t = np.clip(((x - ax) * ex + (y - ay) * ey) / safe, 0.0, 1.0)
        t = np.where(len2 > 0, t, 0.0)
        dx = ax + t * ex - x
        dy = ay + t * ey - y
        dist[s:s + _BLOCK] = np.sqrt((dx * dx + dy * dy).min(axis=1))
    return wind, dist
