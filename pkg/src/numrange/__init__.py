"""Norm-based polygons and upper bounds for the numerical range of a matrix."""

from .bounds import BoundReport, bound_classical, bound_kittaneh_mean, bound_kittaneh_power, bound_report
from .enclosure import (
    HalfPlane,
    Polygon,
    Segment,
    Shape,
    clip_intersection,
    corollary_radius_bound,
    degenerate_multiple,
    octagon_closed_form,
    parallelogram,
    rectangle,
)
from .linalg import NormKind, adjoint, cartesian_split, hermitian_eigen, matmul, norm, quadratic_form
from .oracle import contains, fov_sample, support_function, tangency_check

__version__ = "0.1.0"
