"""Least-squares fits of equiangular spirals r = r0 e^{k theta} to point data.

Points must be ordered along the arm. Angles are unwrapped so consecutive
points differ by less than half a turn, then ln r is regressed on theta.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AmbiguousGap, DegenerateData, InvalidParameter, SingularPoint
from .field_core import EPS_MIN


@dataclass(frozen=True)
class SpiralFit:
    """Fitted spiral and residual statistics.

    ``rmse`` is the RMS residual of ln r. ``alpha`` is the radius-to-tangent
    angle arccot(k) in radians; ``pitch_deg`` is the astronomers' pitch
    angle, 90 deg - alpha folded to [0, 90], i.e. |atan k| in degrees.
    """

    r0: float
    k: float
    gamma: float
    rmse: float
    n: int

    @property
    def alpha(self) -> float:
        return math.pi / 2 - math.atan(self.k)

    @property
    def pitch_deg(self) -> float:
        return math.degrees(abs(math.atan(self.k)))


def _as_points(points) -> np.ndarray:
    pts = np.asarray(points, dtype=np.float64)
    if pts.size == 0:
        raise DegenerateData("no points")
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise InvalidParameter(f"points must have shape (n, 2), got {pts.shape}")
    if pts.shape[0] < 3:
        raise DegenerateData(f"need at least 3 points, got {pts.shape[0]}")
    if not np.all(np.isfinite(pts)):
        raise InvalidParameter("points must be finite")
    if not np.all(np.hypot(pts[:, 0], pts[:, 1]) >= EPS_MIN):
        raise SingularPoint(f"a point lies within {EPS_MIN:g} of the origin")
    return pts


def unwrap_polar(points) -> tuple[np.ndarray, np.ndarray]:
    """Continuous polar angles and radii of an ordered point sequence.

    Each angle is placed in (previous - pi, previous + pi]. A step of
    exactly half a turn (within 1e-12) is ambiguous and rejected.
    """
    pts = _as_points(points)
    raw = np.arctan2(pts[:, 1], pts[:, 0])
    step = np.diff(raw)
    wrapped = np.pi - (np.pi - step) % (2 * np.pi)
    if np.any(np.abs(np.abs(wrapped) - np.pi) <= 1e-12):
        raise AmbiguousGap("consecutive points subtend half a turn; direction is ambiguous")
    theta = np.concatenate([[raw[0]], raw[0] + np.cumsum(wrapped)])
    return theta, np.hypot(pts[:, 0], pts[:, 1])


def fit_polar(theta, r) -> SpiralFit:
    """Ordinary least squares of ln r = ln r0 + k theta."""
    theta = np.asarray(theta, dtype=np.float64)
    r = np.asarray(r, dtype=np.float64)
    if theta.shape != r.shape or theta.ndim != 1:
        raise InvalidParameter("theta and r must be 1-D arrays of equal length")
    if theta.size < 3:
        raise DegenerateData(f"need at least 3 samples, got {theta.size}")
    if not (np.all(np.isfinite(theta)) and np.all(np.isfinite(r))):
        raise InvalidParameter("theta and r must be finite")
    if not np.all(r >= EPS_MIN):
        raise SingularPoint("radii must be positive and outside the singular disk")
    if np.ptp(theta) <= 1e-12:
        raise DegenerateData("all angles coincide; k is unidentifiable")
    lr = np.log(r)
    tm = theta.mean()
    dt = theta - tm
    lm = lr.mean()
    k = float(np.dot(dt, lr - lm) / np.dot(dt, dt))
    log_r0 = lm - k * tm
    resid = lr - (log_r0 + k * theta)
    rmse = float(np.sqrt(np.mean(resid * resid)))
    return SpiralFit(float(np.exp(log_r0)), k, 0.0, rmse, int(theta.size))


def fit_spiral(points) -> SpiralFit:
    """Fit r = r0 e^{k theta} to ordered Cartesian points (phase gamma = 0)."""
    theta, r = unwrap_polar(points)
    return fit_polar(theta, r)


def fit_pieces(points, ranges) -> list[SpiralFit]:
    """Fit separate spirals to index ranges ``[(start, stop), ...]`` of one arm.

    Angles are unwrapped over the whole arm first so every piece shares the
    same angle origin.
    """
    theta, r = unwrap_polar(points)
    fits = []
    for start, stop in ranges:
        if not 0 <= start < stop <= theta.size:
            raise InvalidParameter(f"bad index range ({start}, {stop}) for {theta.size} points")
        fits.append(fit_polar(theta[start:stop], r[start:stop]))
    return fits
