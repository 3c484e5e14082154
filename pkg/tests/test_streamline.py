import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spiralvortex import (
    FieldParams,
    PolarSpiral,
    Trace2D,
    analytic_streamline,
    angle_deviation,
    eval_field,
    integrate_streamline,
    median_angle,
    pitch_angle,
    polar_point,
    start_constants,
)
from spiralvortex.errors import BadRange, DegenerateStart, SingularStart, TooShort

# mpmath, 30 digits
E_PI = 23.140692632779269
E_COS1 = 1.4686939399158852
E_SIN1 = 2.2873552871788424


def test_analytic_examples():
    tr = analytic_streamline(FieldParams(0, 1), 1, 0, 0, math.pi / 2, 10)
    assert tr.xy[-1] == pytest.approx((0, 1), abs=1e-15)
    assert len(tr) == 11 and tr.kind == "analytic"
    tr = analytic_streamline(FieldParams(1, 1), 1, 0, 0, math.pi, 100)
    assert tr.xy[-1] == pytest.approx((-E_PI, 0), abs=1e-12)
    tr = analytic_streamline(FieldParams(-1, 0), 2, 0, 0, 1, 4)
    assert tr.xy[-1] == pytest.approx((0.73575888234288464, 0), abs=1e-15)


def test_analytic_errors():
    with pytest.raises(DegenerateStart):
        analytic_streamline(FieldParams(1, 1), 0, 0, 0, 1, 10)
    with pytest.raises(BadRange):
        analytic_streamline(FieldParams(1, 1), 1, 0, 1, 1, 10)
    with pytest.raises(BadRange):
        analytic_streamline(FieldParams(1, 1), 1, 0, 2, 1, 10)


def test_polar_point_examples():
    assert polar_point(PolarSpiral(1, 0), math.pi / 2) == pytest.approx((0, 1), abs=1e-15)
    assert polar_point(PolarSpiral(2, 0.3), 0.0) == pytest.approx((2, 0), abs=1e-15)
    assert polar_point(PolarSpiral(1, 1), 1.0) == pytest.approx((E_COS1, E_SIN1), rel=1e-15)


def test_integrate_examples():
    tr = integrate_streamline(FieldParams(0, 1), (1, 0), 0, math.pi / 2, 1e-3)
    assert tr.kind == "numeric" and not tr.truncated
    assert tr.t[-1] == math.pi / 2
    assert np.hypot(*(tr.xy[-1] - (0, 1))) <= 1e-8
    tr = integrate_streamline(FieldParams(1, 1), (1, 0), 0, math.pi, 1e-3)
    assert np.hypot(*(tr.xy[-1] - (-E_PI, 0))) <= 1e-4 * math.exp(math.pi)
    tr = integrate_streamline(FieldParams(-5, 0), (1, 0), 0, 100, 1e-3)
    assert tr.truncated
    assert tr.t[-1] < 100
    assert np.all(tr.radius >= 1e-12)


def test_integrate_errors():
    with pytest.raises(SingularStart):
        integrate_streamline(FieldParams(1, 1), (0, 0), 0, 1)
    with pytest.raises(BadRange):
        integrate_streamline(FieldParams(1, 1), (1, 0), 1, 0)


def test_start_constants_reproduce_start():
    # check the (C, gamma) convention against the system at t = 0
    for z0 in [(1, 0), (0.3, -2.0), (-1.5, 0.4), (0, 2)]:
        C, g = start_constants(z0)
        assert 0 <= g < 2 * math.pi
        for c in [FieldParams(0.5, 1), FieldParams(0.5, -1), FieldParams(-2, 0)]:
            tr = analytic_streamline(c, C, g, 0, 0.01, 2)
            assert tr.xy[0] == pytest.approx(z0, abs=1e-15)
            # derivative of the closed form equals the linear system's right side
            x, y = z0
            deriv = (c.a * x - c.b * y, c.b * x + c.a * y)
            fd = (tr.xy[1] - tr.xy[0]) / 0.005
            assert fd == pytest.approx(deriv, abs=0.05)


@settings(max_examples=50, deadline=None)
@given(st.floats(-2, 2), st.floats(-2, 2), st.floats(0.1, 5), st.floats(0, 6.28))
def test_analytic_solves_system(a, b, C, gamma):
    c = FieldParams(a, b)
    n = 2000
    tr = analytic_streamline(c, C, gamma, 0, 1, n)
    h = 1.0 / n
    d = (tr.xy[2:] - tr.xy[:-2]) / (2 * h)
    x, y = tr.xy[1:-1].T
    rhs = np.column_stack([a * x - b * y, b * x + a * y])
    scale = np.max(np.abs(tr.xy)) * (a * a + b * b + 1e-300) ** 1.5
    assert np.max(np.abs(d - rhs)) <= 1e-6 * max(scale, 1.0)
    # the linear system's right side is parallel to V
    u, v = eval_field(c, (x[0], y[0])) if (a or b) else (0.0, 0.0)
    assert abs(u * rhs[0, 1] - v * rhs[0, 0]) <= 1e-12 * max(1.0, np.hypot(*rhs[0]) ** 2)


@given(st.floats(-2, 2), st.floats(-2, 2), st.floats(0.1, 5))
def test_radius_law(a, b, C):
    tr = analytic_streamline(FieldParams(a, b), C, 0.3, -1, 2, 200)
    lr = np.log(tr.radius)
    A = np.column_stack([np.ones_like(tr.t), tr.t])
    coef, *_ = np.linalg.lstsq(A, lr, rcond=None)
    assert np.max(np.abs(A @ coef - lr)) <= 1e-12
    assert coef[1] == pytest.approx(a, abs=1e-12)


@given(st.floats(-3, 3).filter(lambda b: b != 0), st.floats(0.1, 5), st.floats(0, 6.28))
def test_vortex_keeps_radius(b, C, g):
    tr = analytic_streamline(FieldParams(0, b), C, g, 0, 10, 500)
    assert np.max(np.abs(tr.radius - C)) <= 1e-12 * max(1.0, C)


@given(st.floats(-2, 2).filter(lambda a: a != 0), st.floats(0.1, 5), st.floats(0, 6.28))
def test_radial_field_is_a_ray(a, C, g):
    tr = analytic_streamline(FieldParams(a, 0), C, g, 0, 1, 100)
    x0, y0 = tr.xy[0]
    assert np.max(np.abs(tr.x * y0 - tr.y * x0)) <= 1e-12 * max(1.0, np.max(tr.radius) / C) * C * C


@settings(max_examples=20, deadline=None)
@given(st.floats(-2, 2), st.floats(-2, 2))
def test_rk4_matches_closed_form(a, b):
    if math.hypot(a, b) > 2:
        return
    c = FieldParams(a, b)
    num = integrate_streamline(c, (1, 0), 0, 2 * math.pi, 1e-3)
    C, g = start_constants((1, 0))
    ref = analytic_streamline(c, C, g, 0, 2 * math.pi, len(num) - 1)
    assert np.allclose(num.t, ref.t, rtol=0, atol=1e-12)
    assert np.max(np.hypot(*(num.xy - ref.xy).T)) <= 1e-6


def test_polar_matches_analytic_geometry():
    # theta = b t - gamma along a streamline when k = a/b
    for a, b in [(1, 2), (-0.5, 1.5), (0.3, -1)]:
        c = FieldParams(a, b)
        C, gamma = 1.7, 0.9
        tr = analytic_streamline(c, C, gamma, -2, 3, 300)
        theta = b * tr.t - gamma
        r0 = C * math.exp(a * gamma / b)
        pts = polar_point(PolarSpiral(r0, a / b, 0.0), theta)
        assert np.max(np.abs(pts - tr.xy)) <= 1e-12 * max(1.0, np.max(np.abs(tr.xy)))


def test_angle_examples():
    tr = analytic_streamline(FieldParams(1, 2), 1, 0, -3, 3, 500)
    assert angle_deviation(tr) <= 1e-9
    assert median_angle(tr) == pytest.approx(pitch_angle(FieldParams(1, 2)), abs=1e-9)
    circ = analytic_streamline(FieldParams(0, 1), 1, 0, 0, 2 * math.pi, 64)
    assert angle_deviation(circ) <= 1e-15
    assert median_angle(circ) == pytest.approx(math.pi / 2, abs=1e-15)
    num = integrate_streamline(FieldParams(1, 1), (1, 0), 0, 3, 1e-3)
    assert angle_deviation(num) <= 1e-6


def test_angle_clockwise_and_radial():
    tr = analytic_streamline(FieldParams(1, -2), 1, 0, 0, 3, 100)
    assert median_angle(tr) == pytest.approx(pitch_angle(FieldParams(1, -2)), abs=1e-12)
    ray = analytic_streamline(FieldParams(-1, 0), 1, 1.0, 0, 3, 100)
    assert angle_deviation(ray) <= 1e-12


def test_angle_needs_three_samples():
    tr = Trace2D(np.array([0.0, 1.0]), np.array([[1.0, 0], [2.0, 0]]), FieldParams(1, 0), "analytic")
    with pytest.raises(TooShort):
        angle_deviation(tr)
