"""Moments, covariances and correlations of causal effects.

Point estimates assume exogeneity plus response monotonicity; the *_bounds
functions require exogeneity only and return distribution-free intervals.
"""

from ._core import (
    ObservationTable,
    ate,
    bootstrap_ate,
    correlation,
    correlation_bounds,
    derived_stats,
    moment,
    moment_bounds,
    preset_names,
    product_bounds,
    product_moment,
    simulate,
    stratify,
)

__all__ = [
    "ObservationTable",
    "ate",
    "bootstrap_ate",
    "correlation",
    "correlation_bounds",
    "derived_stats",
    "moment",
    "moment_bounds",
    "preset_names",
    "product_bounds",
    "product_moment",
    "simulate",
    "stratify",
]
