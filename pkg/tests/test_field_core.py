import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spiralvortex import (
    EPS_MIN,
    FieldClass,
    FieldParams,
    classify_field,
    cr_residual,
    eval_field,
    invariance_residual,
    pitch_angle,
    velocity,
)
from spiralvortex.errors import InvalidParameter, RadialField, SingularPoint

coef = st.floats(-10, 10, allow_nan=False)
radius = st.floats(1e-3, 1e3)
angle = st.floats(0, 2 * math.pi)


def point(r, phi):
    return (r * math.cos(phi), r * math.sin(phi))


@pytest.mark.parametrize(
    "c, z, expected",
    [
        ((1, 2), (2, 1), (0.0, 1.0)),
        ((0.7, -3.1), (1, 0), (0.7, -3.1)),
        ((1, 2), (0, 1), (-2.0, 1.0)),
    ],
)
def test_eval_field_examples(c, z, expected):
    assert eval_field(FieldParams(*c), z) == pytest.approx(expected, abs=1e-15)


def test_eval_field_rejects_origin():
    with pytest.raises(SingularPoint):
        eval_field(FieldParams(1, 1), (0.0, 0.0))
    with pytest.raises(SingularPoint):
        eval_field(FieldParams(1, 1), (EPS_MIN / 2, 0.0))
    eval_field(FieldParams(1, 1), (2 * EPS_MIN, 0.0))


def test_velocity_matches_scalar():
    c = FieldParams(0.3, -1.7)
    xs = np.array([1.0, -2.0, 0.5])
    ys = np.array([0.25, 3.0, -4.0])
    u, v = velocity(c, xs, ys)
    for x, y, ui, vi in zip(xs, ys, u, v):
        assert eval_field(c, (x, y)) == pytest.approx((ui, vi), rel=1e-15)


def test_field_params_rejects_nonfinite():
    with pytest.raises(InvalidParameter):
        FieldParams(math.nan, 1)
    with pytest.raises(InvalidParameter):
        FieldParams(1, math.inf)


@pytest.mark.parametrize(
    "c, cls",
    [
        ((0, 0), FieldClass.NULL),
        ((0, 1), FieldClass.VORTEX_CCW),
        ((0, -1), FieldClass.VORTEX_CW),
        ((-1, 0), FieldClass.RADIAL_SINK),
        ((2, 0), FieldClass.RADIAL_SOURCE),
        ((1, -3), FieldClass.SPIRAL_SOURCE_CW),
        ((1, 3), FieldClass.SPIRAL_SOURCE_CCW),
        ((-1, 3), FieldClass.SPIRAL_SINK_CCW),
        ((-1, -3), FieldClass.SPIRAL_SINK_CW),
    ],
)
def test_classify_field(c, cls):
    assert classify_field(FieldParams(*c)) is cls


@given(coef, coef, st.floats(1e-3, 1e3))
def test_classify_scale_invariant(a, b, s):
    assert classify_field(FieldParams(s * a, s * b)) is classify_field(FieldParams(a, b))


def test_pitch_angle_examples():
    assert pitch_angle(FieldParams(0, 1)) == pytest.approx(math.pi / 2, abs=1e-15)
    # mpmath: acot(1/2) = 1.10714871779409050301...
    assert pitch_angle(FieldParams(1, 2)) == pytest.approx(1.1071487177940905, abs=1e-15)
    assert pitch_angle(FieldParams(1, 1)) == pytest.approx(math.pi / 4, abs=1e-15)
    with pytest.raises(RadialField):
        pitch_angle(FieldParams(1, 0))


@given(coef, coef.filter(lambda b: abs(b) > 1e-6), st.floats(1e-3, 1e3))
def test_pitch_angle_range_and_scale(a, b, s):
    alpha = pitch_angle(FieldParams(a, b))
    assert 0 < alpha < math.pi
    assert abs(pitch_angle(FieldParams(s * a, s * b)) - alpha) <= 1e-14
    assert abs(math.cos(alpha) / math.sin(alpha) - a / b) <= 1e-9 * max(1, abs(a / b)) ** 2


def test_invariance_examples():
    assert invariance_residual(FieldParams(1, 2), (2, 1), math.pi / 3) <= 1e-12
    assert invariance_residual(FieldParams(0.3, -5), (0.1, 7), 0.0) <= 1e-15
    assert invariance_residual(FieldParams(0, 1), (1, 0), math.pi / 2) <= 1e-15


@settings(max_examples=300)
@given(coef, coef, radius, angle, angle)
def test_rotational_invariance(a, b, r, phi, alpha):
    c = FieldParams(a, b)
    z = point(r, phi)
    vz = math.hypot(*eval_field(c, z))
    assert invariance_residual(c, z, alpha) <= 1e-12 * max(1.0, vz)


@given(coef, coef, radius, angle)
def test_argument_alignment(a, b, r, phi):
    c = FieldParams(a, b)
    if abs(c.c) < 1e-6:
        return
    u, v = eval_field(c, point(r, phi))
    # arg(V) - arg(z) = arg(c) mod 2pi
    d = math.atan2(v, u) - phi - math.atan2(b, a)
    assert abs(math.remainder(d, 2 * math.pi)) <= 1e-12


@given(coef, coef, radius, angle)
def test_decay_law(a, b, r, phi):
    c = FieldParams(a, b)
    z = point(r, phi)
    speed = math.hypot(*eval_field(c, z))
    expected = abs(c.c) / math.hypot(*z)
    assert speed == pytest.approx(expected, rel=1e-14, abs=1e-300)


def test_cr_residual_examples():
    assert max(map(abs, cr_residual(FieldParams(1, 2), (1, 1), 1e-5))) <= 1e-5
    assert cr_residual(FieldParams(0, 0), (0.3, 0.2), 1e-3) == (0.0, 0.0)
    assert max(map(abs, cr_residual(FieldParams(1, 0), (10, 0), 1e-4))) <= 1e-8


def test_cr_residual_shrinks_with_h():
    # truncation term is O(h^2); rounding stays below it at these steps
    c = FieldParams(1.5, -0.5)
    z = (0.8, 0.3)
    big = max(map(abs, cr_residual(c, z, 1e-2)))
    small = max(map(abs, cr_residual(c, z, 1e-3)))
    assert small < big


def test_cr_residual_stencil_guard():
    with pytest.raises(SingularPoint):
        cr_residual(FieldParams(1, 1), (1e-6, 0), 1e-5)
