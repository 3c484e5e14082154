"""Streamlines of c / conj(z): closed form, polar form, and RK4 integration.

The streamlines coincide with the trajectories of the linear system

    x' = a x - b y,    y' = b x + a y,

whose solutions are ``x = C e^{at} cos(bt - gamma)``,
``y = C e^{at} sin(bt - gamma)``. Time ``t`` here is the parameter of that
system, not the physical time of a particle moving with velocity V.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from . import _kernels
from .errors import BadRange, DegenerateStart, InvalidParameter, SingularPoint, SingularStart, TooShort
from .field_core import EPS_MIN, FieldParams, Point2, _as_params, velocity


@dataclass(frozen=True)
class Trace2D:
    """Ordered samples of a planar streamline.

    ``t`` has shape (n,), ``xy`` shape (n, 2). ``truncated`` is set when an
    integration stopped early because it reached the singular disk.
    """

    t: np.ndarray
    xy: np.ndarray
    params: FieldParams
    kind: Literal["analytic", "numeric"]
    truncated: bool = False

    def __post_init__(self) -> None:
        t = np.asarray(self.t, dtype=np.float64)
        xy = np.asarray(self.xy, dtype=np.float64)
        if t.ndim != 1 or xy.shape != (t.size, 2):
            raise InvalidParameter(f"trace shapes disagree: t{t.shape}, xy{xy.shape}")
        if t.size < 2:
            raise TooShort(f"a trace needs at least 2 samples, got {t.size}")
        if not np.all(np.diff(t) > 0):
            raise InvalidParameter("trace times must be strictly increasing")
        if not np.all(np.hypot(xy[:, 0], xy[:, 1]) >= EPS_MIN):
            raise SingularPoint("trace enters the singular disk around the origin")
        t.flags.writeable = False
        xy.flags.writeable = False
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "xy", xy)

    def __len__(self) -> int:
        return self.t.size

    @property
    def x(self) -> np.ndarray:
        return self.xy[:, 0]

    @property
    def y(self) -> np.ndarray:
        return self.xy[:, 1]

    @property
    def radius(self) -> np.ndarray:
        return np.hypot(self.xy[:, 0], self.xy[:, 1])


@dataclass(frozen=True)
class PolarSpiral:
    """r = r0 e^{k theta}, rotated by ``gamma``; theta is the geometric angle."""

    r0: float
    k: float
    gamma: float = 0.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.r0) and self.r0 > 0):
            raise InvalidParameter(f"r0 must be positive and finite, got {self.r0!r}")
        if not math.isfinite(self.k):
            raise InvalidParameter(f"k must be finite, got {self.k!r}")
        object.__setattr__(self, "gamma", float(self.gamma) % (2 * math.pi))


def _check_range(t0: float, t1: float) -> None:
    if not t0 < t1:
        raise BadRange(f"need t0 < t1, got t0={t0!r}, t1={t1!r}")


def start_constants(z0: Point2) -> tuple[float, float]:
    """Map an initial point to the constants (C, gamma) of the closed form.

    At t = 0 the closed form gives z = C e^{-i gamma}, so C = |z0| and
    gamma = -arg(z0) reduced to [0, 2pi). This holds for either sign of b.
    """
    x, y = float(z0[0]), float(z0[1])
    return math.hypot(x, y), (-math.atan2(y, x)) % (2 * math.pi)


def analytic_streamline(c: FieldParams, C: float, gamma: float, t0: float, t1: float, n: int) -> Trace2D:
    """``n + 1`` uniform samples of the closed-form solution on [t0, t1]."""
    c = _as_params(c)
    if C == 0:
        raise DegenerateStart("C = 0 is the stationary origin")
    if not (math.isfinite(C) and C > 0):
        raise InvalidParameter(f"C must be positive, got {C!r}")
    _check_range(t0, t1)
    if n < 2:
        raise InvalidParameter(f"need n >= 2, got {n}")
    t = np.linspace(t0, t1, n + 1)
    rad = C * np.exp(c.a * t)
    phase = c.b * t - gamma
    xy = np.column_stack([rad * np.cos(phase), rad * np.sin(phase)])
    return Trace2D(t, xy, c, "analytic")


def polar_point(s: PolarSpiral, theta):
    """Point(s) at geometric angle ``theta`` on the spiral.

    Returns a :class:`Point2` for scalar ``theta`` and an ``(n, 2)`` array
    otherwise. Along a streamline of c with b != 0 the angle is
    theta = b t - gamma.
    """
    th = np.asarray(theta, dtype=np.float64)
    r = s.r0 * np.exp(s.k * th)
    x = r * np.cos(th + s.gamma)
    y = r * np.sin(th + s.gamma)
    if th.ndim == 0:
        return Point2(float(x), float(y))
    return np.column_stack([x, y])


def integrate_streamline(c: FieldParams, z0: Point2, t0: float, t1: float, step: float = 1e-3) -> Trace2D:
    """Fixed-step classical RK4 trace of the linear system from ``z0``.

    The interval is split into ceil((t1 - t0) / step) equal steps so the last
    sample lands exactly on ``t1``. If the trajectory falls into the singular
    disk (a sink) the trace ends at the last admissible sample and
    ``truncated`` is set.
    """
    c = _as_params(c)
    x0, y0 = float(z0[0]), float(z0[1])
    if not math.hypot(x0, y0) >= EPS_MIN:
        raise SingularStart(f"start point ({x0!r}, {y0!r}) lies in the singular disk")
    if not (math.isfinite(step) and step > 0):
        raise InvalidParameter(f"step must be positive, got {step!r}")
    _check_range(t0, t1)
    n = max(1, math.ceil((t1 - t0) / step * (1 - 1e-12)))
    h = (t1 - t0) / n
    xy = _kernels.rk4_linear(c.a, c.b, x0, y0, h, n, EPS_MIN)
    m = xy.shape[0]
    if m < 2:
        raise SingularPoint("trajectory enters the singular disk within the first step")
    t = t0 + h * np.arange(m, dtype=np.float64)
    if m == n + 1:
        t[-1] = t1
    return Trace2D(t, xy, c, "numeric", truncated=m < n + 1)


def _wrap_half_turn(d: np.ndarray) -> np.ndarray:
    """Reduce angle differences modulo pi into [-pi/2, pi/2)."""
    return (d + math.pi / 2) % math.pi - math.pi / 2


def radius_tangent_angles(trace: Trace2D) -> np.ndarray:
    """Angle between the position vector and the field direction, mod pi.

    Evaluated at interior samples only. The angle of a line is only defined
    modulo pi, so values lie in [0, pi).
    """
    if len(trace) < 3:
        raise TooShort(f"need at least 3 samples, got {len(trace)}")
    x = trace.x[1:-1]
    y = trace.y[1:-1]
    u, v = velocity(trace.params, x, y)
    cross = x * v - y * u
    dot = x * u + y * v
    return np.arctan2(cross, dot) % math.pi


def _circular_median(ang: np.ndarray) -> float:
    ref = ang[0]
    return float((ref + np.median(_wrap_half_turn(ang - ref))) % math.pi)


def median_angle(trace: Trace2D) -> float:
    """Median radius-to-tangent angle of a trace, in [0, pi)."""
    return _circular_median(radius_tangent_angles(trace))


def angle_deviation(trace: Trace2D) -> float:
    """Largest departure of the radius-to-tangent angle from its median."""
    ang = radius_tangent_angles(trace)
    med = _circular_median(ang)
    return float(np.max(np.abs(_wrap_half_turn(ang - med))))
