"""Dominance/balance indices and the multiplicative weight update.

The update multiplies each weight by ``1 + delta_j`` and renormalizes.  The
combined index is

    delta_j(g) = g_j (mean_j - 1/2) - 2 (g_j mean_j - (1/m) sum_s g_s mean_s)

where the first term rewards features with above-midpoint column means and
the second pulls the weighted contributions toward their cross-feature mean.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from evoweights.core import (
    ColumnMeans,
    DeltaVector,
    EvoWeightsError,
    WeightVector,
    check_dims,
)


class PositivityViolation(EvoWeightsError, ArithmeticError):
    """``1 + delta_j <= 0`` for some feature, so the update is undefined.

    ``trajectory`` holds the states visited before the failure when raised
    from :func:`iterate`.
    """

    def __init__(self, feature: int, value: float, step: int | None = None):
        self.feature = feature
        self.value = value
        self.step = step
        self.trajectory: Trajectory | None = None
        super().__init__(self._message())

    def _message(self) -> str:
        where = f" at step {self.step}" if self.step is not None else ""
        return f"1 + delta = {self.value:.6g} <= 0 for feature {self.feature}{where}"

    def __str__(self) -> str:
        return self._message()


@dataclass(frozen=True)
class Converged:
    steps: int


@dataclass(frozen=True)
class MaxIterations:
    steps: int


@dataclass(frozen=True)
class PositivityFailure:
    step: int
    feature: int


Termination = Converged | MaxIterations | PositivityFailure


@dataclass(frozen=True)
class IterationConfig:
    max_iterations: int = 10_000
    tolerance: float = 1e-12
    record_trajectory: bool = True

    def __post_init__(self) -> None:
        if int(self.max_iterations) < 1:
            raise ValueError("max_iterations must be at least 1")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")


@dataclass
class Trajectory:
    """States visited by :func:`iterate`.

    ``deltas[k]`` is the index vector evaluated at ``states[k]``.  Without
    recording only the first and last states are kept; ``steps`` is always the
    number of updates applied.
    """

    states: list[WeightVector] = field(default_factory=list)
    deltas: list[DeltaVector] = field(default_factory=list)
    termination: Termination | None = None
    steps: int = 0

    @property
    def final(self) -> WeightVector:
        return self.states[-1]

    @property
    def initial(self) -> WeightVector:
        return self.states[0]

    @property
    def converged(self) -> bool:
        return isinstance(self.termination, Converged)

    def as_array(self) -> np.ndarray:
        return np.vstack([s.weights for s in self.states])


def _weighted_contribution(gamma: WeightVector, means: ColumnMeans) -> tuple[np.ndarray, np.ndarray]:
    check_dims(len(gamma), means)
    g = gamma.weights
    return g, g * means.means


def delta_dom(gamma: WeightVector, means: ColumnMeans) -> np.ndarray:
    g, _ = _weighted_contribution(gamma, means)
    return g * (means.means - 0.5)


def delta_bal(gamma: WeightVector, means: ColumnMeans) -> np.ndarray:
    g, contrib = _weighted_contribution(gamma, means)
    return -2.0 * (contrib - contrib.sum() / g.size)


def delta(gamma: WeightVector, means: ColumnMeans) -> DeltaVector:
    dom = delta_dom(gamma, means)
    bal = delta_bal(gamma, means)
    return DeltaVector(dom, bal, dom + bal)


def delta_closed_form(gamma: WeightVector, means: ColumnMeans) -> np.ndarray:
    """Combined index in the collapsed form ``-g_j (mean_j + 1/2) + (2/m) g.mean``."""
    g, contrib = _weighted_contribution(gamma, means)
    return -g * (means.means + 0.5) + 2.0 / g.size * contrib.sum()


def replicator_update(gamma: WeightVector, total: np.ndarray) -> WeightVector:
    """Multiply weights by ``1 + total`` and renormalize.

    Raises :class:`PositivityViolation` if any factor is non-positive.
    """
    g = gamma.weights
    check_dims(g.size, total)
    factor = 1.0 + np.asarray(total, dtype=np.float64)
    bad = np.flatnonzero(factor <= 0.0)
    if bad.size:
        j = int(bad[0])
        raise PositivityViolation(j, float(factor[j]))
    grown = g * factor
    return WeightVector(grown / grown.sum())


def step(gamma: WeightVector, means: ColumnMeans) -> WeightVector:
    """Apply one update of the weight dynamic."""
    return replicator_update(gamma, delta(gamma, means).total)


def iterate(
    gamma0: WeightVector,
    means: ColumnMeans,
    config: IterationConfig | None = None,
) -> Trajectory:
    """Run the update from ``gamma0`` until successive iterates agree.

    Stops when the sup-norm distance between consecutive states drops below
    ``config.tolerance`` or after ``config.max_iterations`` updates.
    """
    config = config or IterationConfig()
    check_dims(len(gamma0), means)
    if not gamma0.is_interior:
        warnings.warn(
            "initial weights lie on the simplex boundary; zero weights stay zero "
            "and convergence to the interior equilibrium is not guaranteed",
            RuntimeWarning,
            stacklevel=2,
        )

    traj = Trajectory()
    current = gamma0
    current_delta = delta(current, means)
    traj.states.append(current)
    traj.deltas.append(current_delta)

    for k in range(1, int(config.max_iterations) + 1):
        try:
            nxt = replicator_update(current, current_delta.total)
        except PositivityViolation as exc:
            exc.step = k
            traj.termination = PositivityFailure(k, exc.feature)
            if not config.record_trajectory and traj.states[-1] is not current:
                traj.states.append(current)
                traj.deltas.append(current_delta)
            exc.trajectory = traj
            raise
        gap = float(np.max(np.abs(nxt.weights - current.weights)))
        current, current_delta = nxt, delta(nxt, means)
        traj.steps = k
        if config.record_trajectory:
            traj.states.append(current)
            traj.deltas.append(current_delta)
        if gap < config.tolerance:
            traj.termination = Converged(k)
            break
    else:
        traj.termination = MaxIterations(traj.steps)

    if not config.record_trajectory:
        traj.states.append(current)
        traj.deltas.append(current_delta)
    return traj
