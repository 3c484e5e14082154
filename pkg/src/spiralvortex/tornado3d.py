"""Three-dimensional extension: real 3x3 linear systems with a spiral plane.

A real 3x3 matrix whose characteristic cubic has a complex pair a +/- ib and
a real root p is similar to

    [[a, -b, 0],
     [b,  a, 0],
     [0,  0, p]],

so in suitable coordinates the flow is the planar spiral system plus
z' = p z. The trajectories are then x = r0 e^{kt} cos t, y = r0 e^{kt} sin t,
z = z0 e^{pt} (time rescaled by b, k = a/b) and lie on the surface
x^2 + y^2 = M^2 z^{2k/p}.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import (
    BadExponent,
    BadRange,
    IllConditioned,
    InvalidParameter,
    NegativeZ,
    NotSpiral,
    TooShort,
)

# Relative quadratic-discriminant cutoff separating a complex pair from two reals.
DISCRIMINANT_CUTOFF = 1e-10
# Largest acceptable 2-norm condition number of the canonical basis.
MAX_CONDITION = 1e8


@dataclass(frozen=True)
class EigenStructure:
    """Outcome of classifying a real 3x3 matrix.

    For ``kind == "spiral"``: eigenvalues a +/- ib (b > 0) and p. For
    ``kind == "all_real"``: ``roots`` holds the three real eigenvalues and
    a, b, p are NaN. ``margin`` is the relative discriminant of the deflated
    quadratic (negative for a complex pair); values near zero mean the
    classification sits on the razor's edge. ``basis`` and ``condition`` are
    only filled in by :func:`canonicalize_matrix3`.
    """

    kind: Literal["spiral", "all_real"]
    a: float
    b: float
    p: float
    roots: tuple[float, ...]
    margin: float
    basis: np.ndarray | None = None
    condition: float | None = None

    @property
    def block(self) -> np.ndarray:
        if self.kind != "spiral":
            raise NotSpiral("no canonical block for a matrix with three real eigenvalues")
        return block_matrix(self.a, self.b, self.p)


def block_matrix(a: float, b: float, p: float) -> np.ndarray:
    return np.array([[a, -b, 0.0], [b, a, 0.0], [0.0, 0.0, p]])


def as_matrix3(A) -> np.ndarray:
    m = np.asarray(A, dtype=np.float64)
    if m.size != 9:
        raise InvalidParameter(f"expected 9 entries, got {m.size}")
    m = m.reshape(3, 3)
    if not np.all(np.isfinite(m)):
        raise InvalidParameter("matrix entries must be finite")
    return m


def char_poly(A) -> tuple[float, float, float]:
    """Coefficients (c2, c1, c0) of det(lambda I - A) = l^3 + c2 l^2 + c1 l + c0."""
    m = as_matrix3(A)
    tr = m[0, 0] + m[1, 1] + m[2, 2]
    minors = (
        m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        + m[0, 0] * m[2, 2] - m[0, 2] * m[2, 0]
        + m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1]
    )
    det = (
        m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
        - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
        + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])
    )
    return -tr, minors, -det


def cubic_real_root(c2: float, c1: float, c0: float, maxiter: int = 200) -> float:
    """One real root of l^3 + c2 l^2 + c1 l + c0 by bracketed Newton.

    The bracket starts at the Cauchy bound and Newton steps that leave it are
    replaced by bisection, so convergence is guaranteed.
    """
    def f(x):
        return ((x + c2) * x + c1) * x + c0

    def df(x):
        return (3.0 * x + 2.0 * c2) * x + c1

    bound = 1.0 + max(abs(c2), abs(c1), abs(c0))
    lo, hi = -bound, bound
    # the inflection point is exact for a triple root and a good start otherwise
    x = min(max(-c2 / 3.0, lo), hi)
    for _ in range(maxiter):
        fx = f(x)
        if fx == 0.0:
            return x
        if fx < 0.0:
            lo = x
        else:
            hi = x
        d = df(x)
        xn = x - fx / d if d != 0.0 else math.nan
        if not (lo < xn < hi):
            xn = 0.5 * (lo + hi)
        tol = 4 * np.finfo(float).eps * max(1.0, abs(x))
        if abs(xn - x) <= tol or hi - lo <= tol:
            return xn
        x = xn
    return x


def classify_matrix3(A) -> EigenStructure:
    """Split the spectrum into (complex pair + real) or three reals."""
    c2, c1, c0 = (float(v) for v in char_poly(A))
    r = cubic_real_root(c2, c1, c0)
    # synthetic division by (l - r): l^2 + q1 l + q0
    q1 = c2 + r
    q0 = c1 + r * q1
    disc = q1 * q1 - 4.0 * q0
    scale = q1 * q1 + 4.0 * abs(q0)
    margin = disc / scale if scale > 0 else 0.0
    if margin < -DISCRIMINANT_CUTOFF:
        a = -0.5 * q1
        b = 0.5 * math.sqrt(-disc)
        return EigenStructure("spiral", a, b, r, (r,), float(margin))
    s = math.sqrt(max(disc, 0.0))
    # avoid cancellation in the quadratic formula
    big = -0.5 * (q1 + math.copysign(s, q1))
    small = q0 / big if big != 0.0 else 0.0
    roots = tuple(sorted((float(r), float(big), float(small))))
    return EigenStructure("all_real", math.nan, math.nan, math.nan, roots, float(margin))


def _null_vector(M: np.ndarray) -> np.ndarray:
    """Null vector of a rank-2 3x3 matrix from the best-conditioned row cross product."""
    cands = [np.cross(M[0], M[1]), np.cross(M[0], M[2]), np.cross(M[1], M[2])]
    best = max(cands, key=lambda v: float(np.linalg.norm(v)))
    return best / np.linalg.norm(best)


def canonicalize_matrix3(A) -> EigenStructure:
    """Real basis P = [Re q, -Im q, w] with P^-1 A P = blockdiag([[a,-b],[b,a]], p).

    q is the eigenvector for a + ib and w for p. The phase of q is chosen so
    that Re q and Im q have equal length, which lets all three columns be
    normalized to unit length without disturbing the block.
    """
    m = as_matrix3(A)
    es = classify_matrix3(m)
    if es.kind != "spiral":
        raise NotSpiral(f"three real eigenvalues {es.roots}; no spiral plane")
    lam = complex(es.a, es.b)
    q = _null_vector(m.astype(complex) - lam * np.eye(3))
    # largest component real and positive: makes an already-canonical input return P = I
    j = int(np.argmax(np.abs(q)))
    q = q * (abs(q[j]) / q[j])
    s = complex(np.sum(q * q))
    if abs(s) > 1e-14:
        # Re(e^{2i phi} s) = 0 makes |Re q| = |Im q|
        target = math.pi / 2 - math.atan2(s.imag, s.real)
        cands = [(target + k * math.pi + math.pi) % (2 * math.pi) - math.pi for k in (0, 1)]
        two_phi = min(cands, key=abs)
        q = q * np.exp(0.5j * two_phi)
    e1 = q.real
    e2 = -q.imag
    nrm = np.linalg.norm(e1)
    e1, e2 = e1 / nrm, e2 / nrm
    w = _null_vector(m - es.p * np.eye(3))
    if w[int(np.argmax(np.abs(w)))] < 0:
        w = -w
    P = np.column_stack([e1, e2, w])
    cond = float(np.linalg.cond(P))
    if not cond <= MAX_CONDITION:
        raise IllConditioned(f"canonical basis condition number {cond:.3g} exceeds {MAX_CONDITION:g}")
    P.flags.writeable = False
    return EigenStructure("spiral", es.a, es.b, es.p, es.roots, es.margin, P, cond)


def canonical_residual(A, es: EigenStructure) -> float:
    """Frobenius norm of P^-1 A P minus the canonical block."""
    m = as_matrix3(A)
    if es.basis is None:
        raise InvalidParameter("EigenStructure carries no basis; use canonicalize_matrix3")
    conj = np.linalg.solve(es.basis, m @ es.basis)
    return float(np.linalg.norm(conj - es.block))


@dataclass(frozen=True)
class TornadoParams:
    k: float
    p: float
    r0: float
    z0: float

    def __post_init__(self) -> None:
        for name in ("k", "p", "r0", "z0"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidParameter(f"{name} must be finite")
        if not self.r0 > 0:
            raise InvalidParameter(f"r0 must be positive, got {self.r0!r}")

    @property
    def is_tornado(self) -> bool:
        """k < p < 0 < min(r0, z0): the funnel narrows faster than it descends."""
        return self.k < self.p < 0 < min(self.r0, self.z0)

    @property
    def is_conchospiral(self) -> bool:
        return self.k == self.p

    def surface_constant(self) -> float:
        """M with x^2 + y^2 = M^2 z^{2k/p}, fixed by the t = 0 sample."""
        if self.p == 0:
            raise BadExponent("p = 0: the surface exponent 2k/p is undefined")
        if not self.z0 > 0:
            raise NegativeZ(f"z0 must be positive for a real surface constant, got {self.z0!r}")
        return self.r0 * self.z0 ** (-self.k / self.p)


@dataclass(frozen=True)
class Trace3D:
    """Samples ``t`` (n,) and positions ``xyz`` (n, 3)."""

    t: np.ndarray
    xyz: np.ndarray

    def __post_init__(self) -> None:
        t = np.asarray(self.t, dtype=np.float64)
        xyz = np.asarray(self.xyz, dtype=np.float64)
        if t.ndim != 1 or xyz.shape != (t.size, 3):
            raise InvalidParameter(f"trace shapes disagree: t{t.shape}, xyz{xyz.shape}")
        if t.size < 2:
            raise TooShort(f"a trace needs at least 2 samples, got {t.size}")
        if not np.all(np.diff(t) > 0):
            raise InvalidParameter("trace times must be strictly increasing")
        t.flags.writeable = False
        xyz.flags.writeable = False
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "xyz", xyz)

    def __len__(self) -> int:
        return self.t.size

    def xy_projection(self) -> np.ndarray:
        return self.xyz[:, :2]


def tornado_trace(params: TornadoParams, t0: float, t1: float, n: int) -> Trace3D:
    if not t0 < t1:
        raise BadRange(f"need t0 < t1, got t0={t0!r}, t1={t1!r}")
    if n < 2:
        raise InvalidParameter(f"need n >= 2, got {n}")
    t = np.linspace(t0, t1, n + 1)
    r = params.r0 * np.exp(params.k * t)
    xyz = np.column_stack([r * np.cos(t), r * np.sin(t), params.z0 * np.exp(params.p * t)])
    return Trace3D(t, xyz)


def surface_residual(trace: Trace3D, k: float, p: float, M: float) -> float:
    """max |x^2 + y^2 - M^2 z^{2k/p}| / max(1, x^2 + y^2) over the trace."""
    if p == 0:
        raise BadExponent("p = 0: the surface exponent 2k/p is undefined")
    x, y, z = trace.xyz[:, 0], trace.xyz[:, 1], trace.xyz[:, 2]
    if not np.all(z > 0):
        raise NegativeZ("surface residual needs every z > 0")
    r2 = x * x + y * y
    return float(np.max(np.abs(r2 - M * M * z ** (2 * k / p)) / np.maximum(1.0, r2)))
