"""Harmonic univalent function classes built from the integral operator I^m."""

from .errors import *  # noqa: F401,F403
from .operator import (
    ClassParams,
    ConvexityRadius,
    WeightDiagnostics,
    apply_integral_operator,
    class_functional,
    coefficient_sum,
    convex_combination,
    convexity_radius,
    distortion_bounds,
    distortion_extremals,
    extreme_point_g,
    extreme_point_h,
    is_member_sufficient,
    is_member_thp,
    random_member,
    sharp_function,
    weight,
    weight_dominance_diagnostics,
)
from .series import (
    Convention,
    HarmonicSeries,
    analytic_derivatives,
    convolve,
    evaluate,
    identity_series,
    jacobian,
    make_series,
    neighborhood_distance,
    starlike_functional,
)
from .verify import (
    DEFAULT_GRID,
    ClaimId,
    ClaimReport,
    SampleGrid,
    check_class_functional_min,
    check_convexity,
    check_convolution_closure,
    check_distortion,
    check_necessity,
    check_neighborhood_starlike,
    check_sense_preserving,
    check_starlike,
    find_counterexample,
    reverify,
)

__version__ = "0.1.0"
