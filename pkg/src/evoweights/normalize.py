"""Column-wise maps from raw data to the unit interval."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from evoweights.core import EvoWeightsError, NormalizedMatrix, RawDataset


class Strategy(str, Enum):
    IDENTITY = "identity"
    MAX_RATIO = "max-ratio"
    INVERTED_MAX = "inverted-max"
    SHIFTED_INVERTED_MAX = "shifted-inverted-max"

    @property
    def natural_direction(self) -> Direction:
        if self in (Strategy.IDENTITY, Strategy.MAX_RATIO):
            return Direction.GAIN
        return Direction.COST


class Direction(str, Enum):
    GAIN = "gain"
    COST = "cost"


class NormalizationError(EvoWeightsError, ValueError):
    """A column does not satisfy the preconditions of its strategy."""

    def __init__(self, column: int, message: str):
        self.column = column
        super().__init__(f"column {column}: {message}")


class ZeroColumnError(NormalizationError):
    pass


class OutOfRangeError(NormalizationError):
    pass


class NegativeEntryError(NormalizationError):
    pass


@dataclass(frozen=True)
class NormalizationSpec:
    """One strategy and one gain/cost orientation per column.

    The orientation is not used by the transform itself; it records how the
    column should be read and is the direction checked for order preservation.
    """

    strategies: tuple[Strategy, ...]
    directions: tuple[Direction, ...] = ()

    def __post_init__(self) -> None:
        strategies = tuple(Strategy(s) for s in self.strategies)
        if self.directions:
            directions = tuple(Direction(d) for d in self.directions)
        else:
            directions = tuple(s.natural_direction for s in strategies)
        if len(directions) != len(strategies):
            raise ValueError(
                f"{len(strategies)} strategies but {len(directions)} directions"
            )
        object.__setattr__(self, "strategies", strategies)
        object.__setattr__(self, "directions", directions)

    @classmethod
    def of(cls, *strategies: str | Strategy) -> NormalizationSpec:
        return cls(tuple(Strategy(s) for s in strategies))

    def __len__(self) -> int:
        return len(self.strategies)


def normalize_column(x: np.ndarray, strategy: Strategy, column: int = 0) -> np.ndarray:
    """Apply a single strategy to one column of raw values."""
    x = np.asarray(x, dtype=np.float64)
    strategy = Strategy(strategy)
    if strategy is Strategy.IDENTITY:
        if x.min() < 0.0 or x.max() > 1.0:
            raise OutOfRangeError(column, "identity column has entries outside [0, 1]")
        return x.copy()

    if x.min() < 0.0:
        raise NegativeEntryError(column, f"{strategy.value} requires non-negative values")
    top = x.max()
    if top <= 0.0:
        raise ZeroColumnError(column, f"{strategy.value} requires a positive maximum")

    if strategy is Strategy.MAX_RATIO:
        out = x / top
    elif strategy is Strategy.INVERTED_MAX:
        out = 1.0 - x / top
    else:
        # divides by the max, not the range: the column bottoms out at min/max
        out = 1.0 - (x - x.min()) / top
    if out.min() < 0.0 or out.max() > 1.0:
        raise OutOfRangeError(column, f"{strategy.value} produced values outside [0, 1]")
    return out


def normalize(data: RawDataset, spec: NormalizationSpec) -> NormalizedMatrix:
    """Map every column of ``data`` into [0, 1] using its strategy in ``spec``."""
    n, m = data.shape
    if len(spec) != m:
        raise ValueError(f"spec has {len(spec)} columns, dataset has {m}")
    cols = [normalize_column(data.values[:, j], s, j) for j, s in enumerate(spec.strategies)]
    return NormalizedMatrix(np.column_stack(cols), provenance=spec)


def check_order_preserving(
    data: RawDataset | np.ndarray,
    phi: NormalizedMatrix | np.ndarray,
    column: int,
    direction: Direction | str = Direction.GAIN,
) -> bool:
    """Check pairwise that raw order and normalized order agree in one column.

    For a gain column ``x_i <= x_k`` must hold exactly when ``phi_i <= phi_k``;
    for a cost column the normalized comparison is reversed.
    """
    x = np.asarray(getattr(data, "values", data), dtype=np.float64)[:, column]
    p = np.asarray(getattr(phi, "values", phi), dtype=np.float64)[:, column]
    raw_le = x[:, None] <= x[None, :]
    if Direction(direction) is Direction.GAIN:
        norm_le = p[:, None] <= p[None, :]
    else:
        norm_le = p[:, None] >= p[None, :]
    return bool(np.array_equal(raw_le, norm_le))


def order_preserving_columns(data: RawDataset, phi: NormalizedMatrix, spec: NormalizationSpec) -> list[bool]:
    return [
        check_order_preserving(data, phi, j, d) for j, d in enumerate(spec.directions)
    ]

