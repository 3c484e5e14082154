"""Circulation, flux and Laurent coefficients by quadrature on closed curves.

Both line integrals come out of one complex sum: with W = u - iv,

    W dz = (u dx + v dy) + i (u dy - v dx),

so the real part accumulates circulation and the imaginary part flux.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, NamedTuple

import numpy as np

from . import _kernels
from .errors import BadContour, BadRadius, ClockwiseContour, ContourThroughSingularity, InvalidParameter
from .field_core import EPS_MIN, FieldParams, _as_params, velocity

DEFAULT_SAMPLES = 1024


class CircFlux(NamedTuple):
    circulation: float
    flux: float


@dataclass(frozen=True)
class ClosedContour:
    """A positively oriented closed curve.

    Build with :meth:`circle` or :meth:`sampled`. Circles are integrated with
    the trapezoid rule in the angle parameter; sampled polygons use the
    midpoint of each edge (closure from the last point back to the first is
    implicit).
    """

    kind: Literal["circle", "sampled"]
    n_samples: int
    center: tuple[float, float] = (0.0, 0.0)
    radius: float = 0.0
    points: np.ndarray | None = None

    @classmethod
    def circle(cls, center=(0.0, 0.0), radius: float = 1.0, n_samples: int = DEFAULT_SAMPLES) -> ClosedContour:
        if not (math.isfinite(radius) and radius > 0):
            raise BadContour(f"circle radius must be positive, got {radius!r}")
        if n_samples < 3:
            raise BadContour(f"need at least 3 quadrature nodes, got {n_samples}")
        cx, cy = float(center[0]), float(center[1])
        return cls("circle", int(n_samples), (cx, cy), float(radius))

    @classmethod
    def sampled(cls, points) -> ClosedContour:
        pts = np.asarray(points, dtype=np.float64)
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise BadContour(f"points must have shape (n, 2), got {pts.shape}")
        if pts.shape[0] < 8:
            raise BadContour(f"a sampled contour needs at least 8 points, got {pts.shape[0]}")
        if not np.all(np.isfinite(pts)):
            raise BadContour("contour points must be finite")
        if np.array_equal(pts[0], pts[-1]):
            raise BadContour("first and last points coincide; closure is implicit")
        if signed_area(pts) <= 0:
            raise ClockwiseContour("contour must be counterclockwise (positive shoelace area)")
        pts = pts.copy()
        pts.flags.writeable = False
        return cls("sampled", pts.shape[0], points=pts)

    def nodes(self) -> tuple[np.ndarray, np.ndarray, float]:
        """Quadrature nodes z_j, increments dz_j and the overall weight.

        The integral of f(z) dz is approximated by ``weight * sum(f(z_j) dz_j)``.
        """
        if self.kind == "circle":
            theta = 2 * math.pi * np.arange(self.n_samples) / self.n_samples
            e = np.exp(1j * theta)
            z = complex(*self.center) + self.radius * e
            dz = 1j * self.radius * e
            return z, dz, 2 * math.pi / self.n_samples
        p = self.points[:, 0] + 1j * self.points[:, 1]
        q = np.roll(p, -1)
        return 0.5 * (p + q), q - p, 1.0


def signed_area(points) -> float:
    """Shoelace area; positive for counterclockwise polygons."""
    pts = np.asarray(points, dtype=np.float64)
    x, y = pts[:, 0], pts[:, 1]
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def _checked_nodes(g: ClosedContour):
    z, dz, w = g.nodes()
    near = not np.all(np.abs(z) >= EPS_MIN)
    if g.kind == "sampled":
        near = near or not np.all(np.hypot(g.points[:, 0], g.points[:, 1]) >= EPS_MIN)
    if near:
        raise ContourThroughSingularity(f"the contour passes within {EPS_MIN:g} of the origin")
    return z, dz, w


def circ_flux(c: FieldParams, g: ClosedContour) -> CircFlux:
    """Circulation and flux of V = c / conj(z) around ``g``."""
    c = _as_params(c)
    z, dz, w = _checked_nodes(g)
    circ, flux = _kernels.closed_line_integral(c.a, c.b, z.real, z.imag, dz.real, dz.imag, w)
    return CircFlux(circ, flux)


def conj_field_integral(c: FieldParams, g: ClosedContour) -> complex:
    """Quadrature of the contour integral of (a - ib)/z dz, formed directly.

    Independent of :func:`circ_flux`; equals circulation + i flux.
    """
    c = _as_params(c)
    z, dz, w = _checked_nodes(g)
    return complex(w * np.sum(c.c.conjugate() / z * dz))


def laurent_coeff(c: FieldParams, n: int, radius: float = 1.0, n_samples: int = DEFAULT_SAMPLES) -> complex:
    """Coefficient of z^n in the Laurent series of conj(V(z)) = u - iv.

    Cauchy's formula on the origin-centered circle of the given radius,
    evaluated with the trapezoid rule. The documented working range is
    -8 <= n <= 8; far larger |n| alias against ``n_samples``.
    """
    c = _as_params(c)
    if not (math.isfinite(radius) and radius > EPS_MIN):
        raise BadRadius(f"radius must exceed {EPS_MIN:g}, got {radius!r}")
    if int(n) != n:
        raise InvalidParameter(f"Laurent index must be an integer, got {n!r}")
    if n_samples < 3:
        raise InvalidParameter(f"need at least 3 quadrature nodes, got {n_samples}")
    theta = 2 * math.pi * np.arange(n_samples) / n_samples
    z = radius * np.exp(1j * theta)
    u, v = velocity(c, z.real, z.imag)
    # dz / (2 pi i) = z dtheta / (2 pi), so c_n is the mean of conj(V) z^{-n}
    return complex(np.mean((u - 1j * v) * z ** (-int(n))))
