"""Inequality indices that see distributional asymmetry, not just dispersion.

The package computes the classical Lorenz-gap dispersion index (``gini``)
together with upper- and lower-tail weighted variants (``g_right``,
``g_left``) and their skew-adjusted combination (``sag``), from raw
observations or directly from Lorenz-curve points. It ships exact rational
and pairwise-difference oracles, rank-preserving transfer construction,
seeded Monte-Carlo dataset generators, and a deterministic CLI.
"""

__version__ = "0.1.0"

from .errors import (
    BadEndpointError,
    BadParamsError,
    EmptyOrSingletonError,
    InvalidNError,
    InvalidRanksError,
    NonFiniteValueError,
    NonPositiveTotalError,
    ParseError,
    RankViolationError,
    SaginiError,
    UnequalSpacingError,
)
from .generators import (
    FAMILIES,
    ExperimentConfig,
    SweepResult,
    SweepRow,
    generate,
    sensitivity_sweep,
)
from .metrics import (
    Dataset,
    GapVector,
    InequalityReport,
    LorenzCurve,
    WeightVector,
    build_dataset,
    g_left,
    g_right,
    gap_vector,
    gini,
    lorenz_curve,
    lorenz_from_points,
    make_weights,
    metrics_from_lorenz,
    report,
    sag,
)
from .oracle import (
    RationalReport,
    TransferSpec,
    apply_transfer,
    pairwise_gini,
    rational_report,
    rational_report_from_lorenz,
)

__all__ = [
    "__version__",
    # metrics
    "Dataset",
    "LorenzCurve",
    "GapVector",
    "WeightVector",
    "InequalityReport",
    "build_dataset",
    "lorenz_curve",
    "lorenz_from_points",
    "gap_vector",
    "make_weights",
    "gini",
    "g_right",
    "g_left",
    "sag",
    "report",
    "metrics_from_lorenz",
    # oracle
    "RationalReport",
    "TransferSpec",
    "rational_report",
    "rational_report_from_lorenz",
    "pairwise_gini",
    "apply_transfer",
    # generators
    "FAMILIES",
    "ExperimentConfig",
    "SweepRow",
    "SweepResult",
    "generate",
    "sensitivity_sweep",
    # errors
    "SaginiError",
    "EmptyOrSingletonError",
    "NonFiniteValueError",
    "NonPositiveTotalError",
    "InvalidNError",
    "UnequalSpacingError",
    "BadEndpointError",
    "InvalidRanksError",
    "RankViolationError",
    "BadParamsError",
    "ParseError",
]
