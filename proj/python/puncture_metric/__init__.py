"""Kobayashi-Royden metric asymptotics on punctured spheres.

Exact covering-map coefficient data (solved from the level N = 2,3,4,5
recursion or user-supplied), the asymptotic metric expansion near the
puncture, the direct inversion-series evaluation it is checked against, and
the quantitative Little-Picard maximal-radius bound.
"""

from ._core import (
    CoveringData,
    MetricValue,
    PunctureError,
    RadiusBound,
    bell_polynomial,
    builtin_covering,
    covering_from_coefficients,
    eta_quotient_expansion,
    exp_reciprocal_coefficients,
    invert_covering_series,
    log_series_coefficients,
    metric_direct_eval,
    metric_expansion_eval,
    picard_radius_bound,
    run_verification,
    sigma3,
    solve_covering_coefficients,
)

__all__ = [
    "CoveringData",
    "MetricValue",
    "PunctureError",
    "RadiusBound",
    "bell_polynomial",
    "builtin_covering",
    "covering_from_coefficients",
    "eta_quotient_expansion",
    "exp_reciprocal_coefficients",
    "invert_covering_series",
    "log_series_coefficients",
    "metric_direct_eval",
    "metric_expansion_eval",
    "picard_radius_bound",
    "run_verification",
    "sigma3",
    "solve_covering_coefficients",
]
