"""Hot numeric kernels, each in a numba flavour and a pure-numpy flavour.

The public names at the bottom (``rk4_linear``, ``closed_line_integral``)
point at whichever flavour ``_accel`` selected. Both flavours are always
importable so tests and the benchmark can compare them directly.
"""
from __future__ import annotations

import numpy as np

from ._accel import USE_NUMBA, njit


# --- fixed-step RK4 for x' = a x - b y, y' = b x + a y -----------------------

@njit
def _rk4_linear_loop(a, b, x0, y0, h, n, eps):
    out = np.empty((n + 1, 2))
    out[0, 0] = x0
    out[0, 1] = y0
    x = x0
    y = y0
    count = 1
    for i in range(n):
        k1x = a * x - b * y
        k1y = b * x + a * y
        xt = x + 0.5 * h * k1x
        yt = y + 0.5 * h * k1y
        k2x = a * xt - b * yt
        k2y = b * xt + a * yt
        xt = x + 0.5 * h * k2x
        yt = y + 0.5 * h * k2y
        k3x = a * xt - b * yt
        k3y = b * xt + a * yt
        xt = x + h * k3x
        yt = y + h * k3y
        k4x = a * xt - b * yt
        k4y = b * xt + a * yt
        x = x + h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x)
        y = y + h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y)
        r = np.sqrt(x * x + y * y)
        if not (r >= eps) or not np.isfinite(r):
            break
        out[i + 1, 0] = x
        out[i + 1, 1] = y
        count += 1
    return out[:count]


def rk4_linear_numba(a, b, x0, y0, h, n, eps):
    """Integrate system (x, y)' = (a x - b y, b x + a y) with ``n`` RK4 steps.

    Returns the ``(m, 2)`` array of accepted states, ``m <= n + 1``. The walk
    stops before the first state that falls inside the ``eps`` disk or
    overflows.
    """
    return _rk4_linear_loop(float(a), float(b), float(x0), float(y0), float(h), int(n), float(eps))


def rk4_linear_numpy(a, b, x0, y0, h, n, eps):
    # For a linear autonomous system one RK4 step multiplies z = x + iy by the
    # degree-4 Taylor polynomial of exp(h c); n steps are its n-th power.
    hc = complex(a, b) * h
    g = 1.0 + hc * (1.0 + hc / 2.0 * (1.0 + hc / 3.0 * (1.0 + hc / 4.0)))
    with np.errstate(over="ignore", invalid="ignore", under="ignore"):
        z = complex(x0, y0) * np.power(g, np.arange(n + 1, dtype=np.float64))
    r = np.abs(z)
    bad = ~(r >= eps) | ~np.isfinite(r)
    bad[0] = False
    stop = int(np.argmax(bad)) if bad.any() else n + 1
    z = z[:stop]
    return np.column_stack([z.real, z.imag])


# --- closed line integral of conj(V) dz for V = c / conj(z) --------------------

@njit
def _line_integral_loop(a, b, zx, zy, dzx, dzy, weight):
    re = 0.0
    im = 0.0
    for j in range(zx.shape[0]):
        x = zx[j]
        y = zy[j]
        r2 = x * x + y * y
        u = (a * x - b * y) / r2
        v = (b * x + a * y) / r2
        # (u - i v)(dx + i dy)
        re += u * dzx[j] + v * dzy[j]
        im += u * dzy[j] - v * dzx[j]
    return re * weight, im * weight


def closed_line_integral_numba(a, b, zx, zy, dzx, dzy, weight):
    """Return (circulation, flux) as ``weight * sum(conj(V(z_j)) dz_j)``."""
    return _line_integral_loop(
        float(a), float(b),
        np.ascontiguousarray(zx, dtype=np.float64), np.ascontiguousarray(zy, dtype=np.float64),
        np.ascontiguousarray(dzx, dtype=np.float64), np.ascontiguousarray(dzy, dtype=np.float64),
        float(weight),
    )


def closed_line_integral_numpy(a, b, zx, zy, dzx, dzy, weight):
    r2 = zx * zx + zy * zy
    u = (a * zx - b * zy) / r2
    v = (b * zx + a * zy) / r2
    re = np.sum(u * dzx + v * dzy)
    im = np.sum(u * dzy - v * dzx)
    return float(re * weight), float(im * weight)


if USE_NUMBA:
    rk4_linear = rk4_linear_numba
    closed_line_integral = closed_line_integral_numba
else:
    rk4_linear = rk4_linear_numpy
    closed_line_integral = closed_line_integral_numpy
