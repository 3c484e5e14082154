"""Rotationally invariant planar flows V(z) = c / conj(z) and their 3D extension."""
from ._accel import backend_name
from .contour import CircFlux, ClosedContour, circ_flux, conj_field_integral, laurent_coeff
from .errors import SpiralVortexError
from .field_core import (
    EPS_MIN,
    FieldClass,
    FieldParams,
    Point2,
    Vec2,
    classify_field,
    cr_residual,
    eval_field,
    invariance_residual,
    pitch_angle,
    velocity,
)
from .spiral_fit import SpiralFit, fit_pieces, fit_polar, fit_spiral, unwrap_polar
from .streamline import (
    PolarSpiral,
    Trace2D,
    analytic_streamline,
    angle_deviation,
    integrate_streamline,
    median_angle,
    polar_point,
    start_constants,
)
from .tornado3d import (
    EigenStructure,
    TornadoParams,
    Trace3D,
    canonical_residual,
    canonicalize_matrix3,
    classify_matrix3,
    surface_residual,
    tornado_trace,
)

__version__ = "0.1.0"
