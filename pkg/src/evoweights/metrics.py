"""Diagnostics describing how far equilibrium weights sit from uniform."""

from __future__ import annotations

import math

import numpy as np

from evoweights.core import ColumnMeans, NormalizedMatrix, WeightVector, check_dims


def _weighted_deviation(gamma_star: WeightVector, feature_levels: np.ndarray) -> float:
    g = gamma_star.weights
    m = g.size
    check_dims(m, feature_levels)
    return float(m / (m - 1) * np.sum(np.abs(g - 1.0 / m) * feature_levels))


def impact_norm(means: ColumnMeans, gamma_star: WeightVector) -> float:
    """Deviation of the weights from uniform, scaled by each column mean."""
    return _weighted_deviation(gamma_star, means.means)


def top_cohort(phi: NormalizedMatrix, fraction: float = 0.1) -> np.ndarray:
    """Indices of the ``ceil(fraction * n)`` rows with the largest row means.

    Ties go to the lower row index.  At least one row is always returned.
    """
    n = phi.shape[0]
    size = max(1, math.ceil(fraction * n - 1e-9))
    order = np.argsort(-phi.values.mean(axis=1), kind="stable")
    return np.sort(order[:size])


def qualified_impact_norm(
    phi: NormalizedMatrix, gamma_star: WeightVector, fraction: float = 0.1
) -> float:
    """Impact norm evaluated on the column means of the top rows only."""
    cohort = top_cohort(phi, fraction)
    return _weighted_deviation(gamma_star, phi.values[cohort].mean(axis=0))


def feature_impact(phi: NormalizedMatrix, gamma_star: WeightVector) -> np.ndarray:
    """Column range times weight, per feature."""
    check_dims(phi.shape[1], gamma_star)
    spread = phi.values.max(axis=0) - phi.values.min(axis=0)
    return spread * gamma_star.weights
