"""Covariate-adjusted standardized effect sizes for two-group comparisons.

Workflow: load a delimited file into a :class:`Dataset`, build the
group-sorted :class:`PartitionedDesign`, fit it (two equivalent routes),
and summarize with :func:`effect_report`.
"""

from .dataio import Dataset, histogram, load_column, load_csv
from .distributions import (
    PValueResult,
    f_upper_p,
    regularized_incomplete_beta,
    t_two_sided_p,
)
from .effects import (
    EffectReport,
    cohens_d,
    cohens_d_adjusted,
    d_from_beta,
    d_from_t,
    effect_report,
    f_squared_from_d,
    f_squared_from_r2,
    f_stat,
    magnitude_labels,
    t_from_d,
)
from .regression import (
    GroupSummary,
    PartitionedDesign,
    PartitionedFit,
    build_design,
    coefficient_names,
    fit_fwl,
    fit_monolithic,
    group_summaries,
    r_squared_pair,
    sigma2_hat,
    standard_errors,
)

__version__ = "0.1.0"

__all__ = [
    "Dataset",
    "EffectReport",
    "GroupSummary",
    "PValueResult",
    "PartitionedDesign",
    "PartitionedFit",
    "build_design",
    "coefficient_names",
    "cohens_d",
    "cohens_d_adjusted",
    "d_from_beta",
    "d_from_t",
    "effect_report",
    "f_squared_from_d",
    "f_squared_from_r2",
    "f_stat",
    "f_upper_p",
    "fit_fwl",
    "fit_monolithic",
    "group_summaries",
    "histogram",
    "load_column",
    "load_csv",
    "magnitude_labels",
    "r_squared_pair",
    "regularized_incomplete_beta",
    "sigma2_hat",
    "standard_errors",
    "t_from_d",
    "t_two_sided_p",
]
