"""Shared numeric types: raw and normalized matrices, column means, weights.

All types are frozen dataclasses holding read-only float64 arrays, so they can
be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Sequence

import numpy as np

if TYPE_CHECKING:
    from evoweights.normalize import NormalizationSpec

SIMPLEX_TOL = 1e-12


class EvoWeightsError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatchError(EvoWeightsError, ValueError):
    """Two operands disagree on the number of rows or features."""


class InvalidDataError(EvoWeightsError, ValueError):
    """Input violates a type invariant (shape, finiteness, range)."""


def _frozen(values, ndim: int, name: str) -> np.ndarray:
    arr = np.array(values, dtype=np.float64)
    if arr.ndim != ndim:
        raise InvalidDataError(f"{name} must be {ndim}-dimensional, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidDataError(f"{name} contains NaN or infinite entries")
    arr.flags.writeable = False
    return arr


def _check_features(m: int, name: str) -> None:
    if m < 2:
        raise InvalidDataError(f"{name} needs at least 2 features, got {m}")


@dataclass(frozen=True)
class RawDataset:
    """An n x m matrix of raw feature values with row and column names."""

    values: np.ndarray
    row_labels: tuple[str, ...] = ()
    column_names: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        values = _frozen(self.values, 2, "values")
        n, m = values.shape
        if n < 1:
            raise InvalidDataError("dataset has no rows")
        _check_features(m, "dataset")
        labels = tuple(self.row_labels) or tuple(str(i) for i in range(n))
        names = tuple(self.column_names) or tuple(f"f{j}" for j in range(m))
        if len(labels) != n:
            raise InvalidDataError(f"{len(labels)} row labels for {n} rows")
        if len(names) != m:
            raise InvalidDataError(f"{len(names)} column names for {m} columns")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "row_labels", labels)
        object.__setattr__(self, "column_names", names)

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape


@dataclass(frozen=True)
class NormalizedMatrix:
    """An n x m matrix with every entry in [0, 1].

    ``provenance`` is the normalization spec that produced the matrix, or
    ``None`` when the matrix was supplied directly.
    """

    values: np.ndarray
    provenance: NormalizationSpec | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        values = _frozen(self.values, 2, "normalized matrix")
        n, m = values.shape
        if n < 1:
            raise InvalidDataError("normalized matrix has no rows")
        _check_features(m, "normalized matrix")
        if values.min() < 0.0 or values.max() > 1.0:
            raise InvalidDataError("normalized matrix entries must lie in [0, 1]")
        object.__setattr__(self, "values", values)

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape


@dataclass(frozen=True)
class ColumnMeans:
    """Per-feature averages of a normalized matrix, each in [0, 1]."""

    means: np.ndarray

    def __post_init__(self) -> None:
        means = _frozen(self.means, 1, "column means")
        _check_features(means.size, "column means")
        if means.min() < 0.0 or means.max() > 1.0:
            raise InvalidDataError("column means must lie in [0, 1]")
        object.__setattr__(self, "means", means)

    def __len__(self) -> int:
        return self.means.size


@dataclass(frozen=True)
class WeightVector:
    """A point on the standard simplex.

    Any non-negative vector with positive sum is accepted and rescaled to sum
    to one, which absorbs the drift accumulated by repeated updates.
    """

    weights: np.ndarray

    def __post_init__(self) -> None:
        w = np.array(self.weights, dtype=np.float64)
        if w.ndim != 1:
            raise InvalidDataError(f"weights must be a vector, got shape {w.shape}")
        if not np.all(np.isfinite(w)):
            raise InvalidDataError("weights contain NaN or infinite entries")
        _check_features(w.size, "weight vector")
        if w.min() < 0.0:
            raise InvalidDataError("weights must be non-negative")
        total = w.sum()
        if total <= 0.0:
            raise InvalidDataError("weights sum to zero")
        if abs(total - 1.0) > SIMPLEX_TOL:
            w = w / total
        w.flags.writeable = False
        object.__setattr__(self, "weights", w)

    @classmethod
    def uniform(cls, m: int) -> WeightVector:
        return cls(np.full(m, 1.0 / m))

    @property
    def is_interior(self) -> bool:
        return bool(np.all(self.weights > 0.0))

    def __len__(self) -> int:
        return self.weights.size


@dataclass(frozen=True)
class DeltaVector:
    """Dominance, balance and combined update indices for every feature."""

    dom: np.ndarray
    bal: np.ndarray
    total: np.ndarray

    def __post_init__(self) -> None:
        for name in ("dom", "bal", "total"):
            object.__setattr__(self, name, _frozen(getattr(self, name), 1, name))
        if not (self.dom.size == self.bal.size == self.total.size):
            raise DimensionMismatchError("dom, bal and total differ in length")


def check_dims(m: int, *others: Sequence | np.ndarray) -> None:
    for other in others:
        if len(other) != m:
            raise DimensionMismatchError(f"expected {m} features, got {len(other)}")


def column_means(phi: NormalizedMatrix) -> ColumnMeans:
    """Average each column of ``phi`` over its rows."""
    means = phi.values.mean(axis=0)
    # guard against 1 + 1e-16 from summation round-off
    return ColumnMeans(np.clip(means, 0.0, 1.0))
