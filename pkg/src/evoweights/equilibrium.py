"""Closed-form interior equilibrium of the weight dynamic."""

from __future__ import annotations

import numpy as np

from evoweights.core import ColumnMeans, WeightVector
from evoweights.dynamics import delta


def fixed_point(means: ColumnMeans) -> WeightVector:
    """Return the unique interior fixed point for the given column means.

    Each weight is proportional to ``1 / (mean_j + 1/2)``, so features with
    lower averages receive more weight.
    """
    inv = 1.0 / (means.means + 0.5)
    return WeightVector(inv / inv.sum())


def fixed_point_residual(gamma: WeightVector, means: ColumnMeans) -> float:
    """Largest deviation of any index from the weight-averaged index.

    At an interior equilibrium every ``delta_j`` equals ``sum_s g_s delta_s``,
    so the residual vanishes there and nowhere else on the simplex.
    """
    total = delta(gamma, means).total
    return float(np.max(np.abs(total - gamma.weights @ total)))
