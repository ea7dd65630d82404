"""Feature weights for discrete multi-objective data.

Weights evolve on the probability simplex under a replicator-type update
driven by the column means of a normalized data matrix, and converge to a
closed-form interior equilibrium that can be used to scalarize and rank rows.
"""

__version__ = "0.1.0"

from evoweights.core import (
    ColumnMeans,
    DeltaVector,
    DimensionMismatchError,
    EvoWeightsError,
    InvalidDataError,
    NormalizedMatrix,
    RawDataset,
    WeightVector,
    column_means,
)
from evoweights.dynamics import (
    Converged,
    IterationConfig,
    MaxIterations,
    PositivityFailure,
    PositivityViolation,
    Trajectory,
    delta,
    delta_bal,
    delta_dom,
    iterate,
    step,
)
from evoweights.equilibrium import fixed_point, fixed_point_residual
from evoweights.metrics import feature_impact, impact_norm, qualified_impact_norm, top_cohort
from evoweights.normalize import (
    Direction,
    NormalizationSpec,
    Strategy,
    check_order_preserving,
    normalize,
)
from evoweights.ranking import RankReport, certify_scalarization, pareto_front, rank
from evoweights.strategies import (
    DependenceMatrix,
    dependence,
    gene_strategy,
    global_fitness,
    organism_strategy,
)

__all__ = [
    "ColumnMeans",
    "Converged",
    "DeltaVector",
    "DependenceMatrix",
    "DimensionMismatchError",
    "Direction",
    "EvoWeightsError",
    "InvalidDataError",
    "IterationConfig",
    "MaxIterations",
    "NormalizationSpec",
    "NormalizedMatrix",
    "PositivityFailure",
    "PositivityViolation",
    "RankReport",
    "RawDataset",
    "Strategy",
    "Trajectory",
    "WeightVector",
    "certify_scalarization",
    "check_order_preserving",
    "column_means",
    "delta",
    "delta_bal",
    "delta_dom",
    "dependence",
    "feature_impact",
    "fixed_point",
    "fixed_point_residual",
    "gene_strategy",
    "global_fitness",
    "impact_norm",
    "iterate",
    "normalize",
    "organism_strategy",
    "pareto_front",
    "qualified_impact_norm",
    "rank",
    "step",
    "top_cohort",
]
