"""Per-row (organism) and per-feature (gene) decomposition of the indices.

Rows of the normalized matrix play the role of organisms and features the
role of genes.  Averaging the per-row strategy matrices over the rows gives
back the aggregate dominance and balance indices used by the dynamic, which
is what the tests in this package check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from evoweights.core import (
    DeltaVector,
    EvoWeightsError,
    NormalizedMatrix,
    WeightVector,
    check_dims,
)


class ZeroFitnessRowError(EvoWeightsError, ZeroDivisionError):
    def __init__(self, row: int):
        self.row = row
        super().__init__(f"row {row} has zero global fitness; dependence is undefined")


@dataclass(frozen=True)
class DependenceMatrix:
    """Share of each row's fitness contributed by each feature."""

    mu: np.ndarray

    def __post_init__(self) -> None:
        mu = np.array(self.mu, dtype=np.float64)
        mu.flags.writeable = False
        object.__setattr__(self, "mu", mu)

    def row_sums(self) -> np.ndarray:
        return self.mu.sum(axis=1)


def _weighted(phi: NormalizedMatrix, gamma: WeightVector) -> np.ndarray:
    check_dims(phi.shape[1], gamma)
    return phi.values * gamma.weights


def global_fitness(phi: NormalizedMatrix, gamma: WeightVector) -> np.ndarray:
    """Weighted row sums ``r_i = sum_j g_j phi_ij``."""
    check_dims(phi.shape[1], gamma)
    return phi.values @ gamma.weights


def dependence(phi: NormalizedMatrix, gamma: WeightVector) -> DependenceMatrix:
    contrib = _weighted(phi, gamma)
    r = contrib.sum(axis=1)
    zero = np.flatnonzero(r <= 0.0)
    if zero.size:
        raise ZeroFitnessRowError(int(zero[0]))
    return DependenceMatrix(contrib / r[:, None])


def gene_strategy(phi: NormalizedMatrix, gamma: WeightVector) -> np.ndarray:
    """Dominant gene strategy ``g_j (phi_ij - 1/2)`` for every cell."""
    check_dims(phi.shape[1], gamma)
    return gamma.weights * (phi.values - 0.5)


def organism_strategy(phi: NormalizedMatrix, gamma: WeightVector) -> np.ndarray:
    """Balanced organism strategy ``-2 r_i (mu_ij - 1/m)``.

    Evaluated as ``-2 (g_j phi_ij - r_i / m)``, which needs no division and is
    zero on rows with zero fitness.
    """
    contrib = _weighted(phi, gamma)
    m = contrib.shape[1]
    return -2.0 * (contrib - contrib.sum(axis=1, keepdims=True) / m)


def organism_strategy_from_dependence(phi: NormalizedMatrix, gamma: WeightVector) -> np.ndarray:
    """Same quantity as :func:`organism_strategy`, computed through ``mu``."""
    mu = dependence(phi, gamma).mu
    r = global_fitness(phi, gamma)
    return -2.0 * r[:, None] * (mu - 1.0 / mu.shape[1])


def aggregate_delta(phi: NormalizedMatrix, gamma: WeightVector) -> DeltaVector:
    """Average the per-row strategies over all rows."""
    dom = gene_strategy(phi, gamma).mean(axis=0)
    bal = organism_strategy(phi, gamma).mean(axis=0)
    return DeltaVector(dom, bal, dom + bal)
