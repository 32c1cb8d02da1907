"""Kriging estimation by grid search on |w'r + mu|."""

from ._core import (
    CorrelogramModel,
    EstimateReport,
    GridKrigeError,
    Location,
    SamplePoint,
    SampleSet,
    SearchResult,
    builtin_table1,
    estimate_at,
    estimate_gls,
    grid_search,
    objective_surface,
    read_samples_csv,
    write_report,
)

__all__ = [
    "CorrelogramModel",
    "EstimateReport",
    "GridKrigeError",
    "Location",
    "SamplePoint",
    "SampleSet",
    "SearchResult",
    "builtin_table1",
    "estimate_at",
    "estimate_gls",
    "grid_search",
    "objective_surface",
    "read_samples_csv",
    "write_report",
]
