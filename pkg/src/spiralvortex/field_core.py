"""The spiral-vortex field family V(z) = c / conj(z) with c = a + ib.

Points and velocities are plain ``(x, y)`` / ``(u, v)`` pairs; the complex
number x + iy is identified with the point (x, y) throughout.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

from .errors import InvalidParameter, RadialField, SingularPoint

# Radius of the excluded disk around the singular origin.
EPS_MIN = 1e-12
# Default central-difference step for cr_residual.
FD_STEP = 1e-5


class Point2(NamedTuple):
    x: float
    y: float


class Vec2(NamedTuple):
    u: float
    v: float


@dataclass(frozen=True)
class FieldParams:
    """The constant c = a + ib. ``a`` is flux / 2pi and ``b`` circulation / 2pi."""

    a: float
    b: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise InvalidParameter(f"field parameters must be finite, got a={self.a!r}, b={self.b!r}")
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))

    @property
    def c(self) -> complex:
        return complex(self.a, self.b)

    @classmethod
    def from_complex(cls, c: complex) -> FieldParams:
        return cls(c.real, c.imag)


class FieldClass(str, Enum):
    NULL = "null"
    RADIAL_SOURCE = "radial-source"
    RADIAL_SINK = "radial-sink"
    VORTEX_CCW = "vortex-ccw"
    VORTEX_CW = "vortex-cw"
    SPIRAL_SOURCE_CCW = "spiral-source-ccw"
    SPIRAL_SOURCE_CW = "spiral-source-cw"
    SPIRAL_SINK_CCW = "spiral-sink-ccw"
    SPIRAL_SINK_CW = "spiral-sink-cw"


def _as_params(c) -> FieldParams:
    if isinstance(c, FieldParams):
        return c
    if isinstance(c, complex):
        return FieldParams.from_complex(c)
    a, b = c
    return FieldParams(a, b)


def _check_radius(x: float, y: float) -> None:
    if not math.hypot(x, y) >= EPS_MIN:
        raise SingularPoint(f"point ({x!r}, {y!r}) lies within {EPS_MIN:g} of the origin")


def eval_field(c: FieldParams, z: Point2) -> Vec2:
    """Velocity at a single point: ((ax - by)/|z|^2, (bx + ay)/|z|^2)."""
    c = _as_params(c)
    x, y = float(z[0]), float(z[1])
    _check_radius(x, y)
    r2 = x * x + y * y
    return Vec2((c.a * x - c.b * y) / r2, (c.b * x + c.a * y) / r2)


def velocity(c: FieldParams, x, y) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized :func:`eval_field` over arrays of coordinates."""
    c = _as_params(c)
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    r2 = x * x + y * y
    if not np.all(np.sqrt(r2) >= EPS_MIN):
        raise SingularPoint(f"at least one point lies within {EPS_MIN:g} of the origin")
    return (c.a * x - c.b * y) / r2, (c.b * x + c.a * y) / r2


def classify_field(c: FieldParams) -> FieldClass:
    c = _as_params(c)
    a, b = c.a, c.b
    if a == 0 and b == 0:
        return FieldClass.NULL
    if b == 0:
        return FieldClass.RADIAL_SOURCE if a > 0 else FieldClass.RADIAL_SINK
    if a == 0:
        return FieldClass.VORTEX_CCW if b > 0 else FieldClass.VORTEX_CW
    src = "source" if a > 0 else "sink"
    rot = "ccw" if b > 0 else "cw"
    return FieldClass(f"spiral-{src}-{rot}")


def pitch_angle(c: FieldParams) -> float:
    """Angle between radius vector and streamline tangent, in (0, pi).

    This is arccot(a/b). Raises :class:`RadialField` when b = 0, where the
    streamlines are rays and the angle is undefined.
    """
    c = _as_params(c)
    if c.b == 0:
        raise RadialField("pitch angle is undefined for b = 0 (streamlines are rays)")
    return math.pi / 2 - math.atan(c.a / c.b)


def invariance_residual(c: FieldParams, z: Point2, alpha: float) -> float:
    """|e^{i alpha} V(z) - V(e^{i alpha} z)| for a single point."""
    c = _as_params(c)
    x, y = float(z[0]), float(z[1])
    rot = complex(math.cos(alpha), math.sin(alpha))
    zr = complex(x, y) * rot
    v0 = complex(*eval_field(c, (x, y)))
    v1 = complex(*eval_field(c, (zr.real, zr.imag)))
    return abs(rot * v0 - v1)


def invariance_residuals(c: FieldParams, x, y, alpha) -> np.ndarray:
    """Vectorized :func:`invariance_residual`."""
    c = _as_params(c)
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    rot = np.exp(1j * np.asarray(alpha, dtype=np.float64))
    zr = (x + 1j * y) * rot
    u0, v0 = velocity(c, x, y)
    u1, v1 = velocity(c, zr.real, zr.imag)
    return np.abs(rot * (u0 + 1j * v0) - (u1 + 1j * v1))


def cr_residual(c: FieldParams, z: Point2, h: float = FD_STEP) -> tuple[float, float]:
    """Central-difference estimates of (u_x + v_y, v_x - u_y) at ``z``.

    Both vanish identically away from the origin; the estimates are O(h^2).
    """
    c = _as_params(c)
    x, y = float(z[0]), float(z[1])
    if not h > 0:
        raise InvalidParameter(f"step h must be positive, got {h!r}")
    if not math.hypot(x, y) >= max(2 * h, EPS_MIN):
        raise SingularPoint(f"stencil of half-width {h:g} at ({x!r}, {y!r}) reaches the singular origin")
    # |z| >= 2h keeps every stencil node at least h from the origin
    ue, ve = eval_field(c, (x + h, y))
    uw, vw = eval_field(c, (x - h, y))
    un, vn = eval_field(c, (x, y + h))
    us, vs = eval_field(c, (x, y - h))
    u_x = (ue - uw) / (2 * h)
    v_x = (ve - vw) / (2 * h)
    u_y = (un - us) / (2 * h)
    v_y = (vn - vs) / (2 * h)
    return u_x + v_y, v_x - u_y
