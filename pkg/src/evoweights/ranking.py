"""Scalarization, ranking and brute-force Pareto checks."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from evoweights.core import NormalizedMatrix, WeightVector
from evoweights.strategies import global_fitness


@dataclass(frozen=True)
class RankReport:
    """Scores and rank order of every row under one weight vector.

    ``order[0]`` is the best row: highest score when maximizing, lowest when
    minimizing.  Equal scores keep their original row order.
    """

    scores: np.ndarray
    order: np.ndarray
    pareto_flags: np.ndarray
    weight_used: WeightVector
    maximize: bool = True

    @property
    def ranks(self) -> np.ndarray:
        """1-based rank of each row."""
        ranks = np.empty_like(self.order)
        ranks[self.order] = np.arange(1, self.order.size + 1)
        return ranks


@dataclass(frozen=True)
class Certificate:
    """Outcome of :func:`certify_scalarization`.

    When ``certified`` is false, ``witness`` is ``(best_row, dominating_row)``.
    """

    certified: bool
    best_rows: tuple[int, ...]
    witness: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.certified


def _as_array(phi: NormalizedMatrix | np.ndarray) -> np.ndarray:
    return np.asarray(getattr(phi, "values", phi), dtype=np.float64)


def dominators(phi: NormalizedMatrix | np.ndarray, maximize: bool = True) -> np.ndarray:
    """Boolean matrix ``D`` with ``D[k, i]`` true when row k dominates row i."""
    a = _as_array(phi)
    if not maximize:
        a = -a
    ge = np.all(a[:, None, :] >= a[None, :, :], axis=2)
    gt = np.any(a[:, None, :] > a[None, :, :], axis=2)
    return ge & gt


def pareto_front(phi: NormalizedMatrix | np.ndarray, maximize: bool = True) -> frozenset[int]:
    """Rows that no other row dominates, by exhaustive pairwise comparison."""
    dominated = dominators(phi, maximize).any(axis=0)
    return frozenset(int(i) for i in np.flatnonzero(~dominated))


def rank(phi: NormalizedMatrix, gamma: WeightVector, maximize: bool = True) -> RankReport:
    scores = global_fitness(phi, gamma)
    key = -scores if maximize else scores
    order = np.argsort(key, kind="stable")
    front = pareto_front(phi, maximize)
    flags = np.array([i in front for i in range(scores.size)], dtype=bool)
    return RankReport(scores, order, flags, gamma, maximize)


def certify_scalarization(
    phi: NormalizedMatrix, gamma: WeightVector, maximize: bool = True
) -> Certificate:
    """Check that every best-scoring row is Pareto optimal.

    With strictly positive weights this always holds; a failed certificate
    points at a dominated best row and the row dominating it.
    """
    if not gamma.is_interior:
        warnings.warn(
            "weights have zero entries; best rows need not be Pareto optimal",
            RuntimeWarning,
            stacklevel=2,
        )
    scores = global_fitness(phi, gamma)
    target = scores.max() if maximize else scores.min()
    best = tuple(int(i) for i in np.flatnonzero(scores == target))
    dom = dominators(phi, maximize)
    for i in best:
        beaten_by = np.flatnonzero(dom[:, i])
        if beaten_by.size:
            return Certificate(False, best, (i, int(beaten_by[0])))
    return Certificate(True, best)
