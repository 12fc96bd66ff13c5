"""Partitioned linear regression for a two-group comparison with covariates.

The model is ``y = X1 d1 + X2 d2 + e`` where X1 holds the intercept and the
group dummy (group 1 rows first, dummy 0; group 2 rows last, dummy 1) and X2
holds the covariate columns. The same fit is available two ways:

* :func:`fit_monolithic` solves the full design in one least-squares pass;
* :func:`fit_fwl` partials the covariates out first (regress y on the
  group-centered covariates, then regress the adjusted response on X1).

The two agree to floating-point accuracy; keeping both routes makes that
equivalence testable instead of assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .dataio import Dataset
from .errors import (
    DegenerateResponseError,
    GroupTooSmallError,
    InsufficientRowsError,
    NonPositiveDfError,
    RankDeficientDesignError,
    RankDeficientError,
)

__all__ = [
    "PartitionedDesign",
    "PartitionedFit",
    "GroupSummary",
    "build_design",
    "fit_monolithic",
    "fit_fwl",
    "sigma2_hat",
    "group_summaries",
    "r_squared_pair",
    "annihilator_group",
    "annihilator_covariates",
    "delta1_scaled_covariance",
    "delta1_from_adjusted",
    "residual_quadratic_matrix",
    "coefficient_names",
    "standard_errors",
]


@dataclass(frozen=True)
class PartitionedDesign:
    """Group-sorted design for the partitioned model.

    Rows 0..n1-1 belong to group 1 (dummy 0), the rest to group 2 (dummy 1).
    ``row_order[i]`` is the index of design row i in the original dataset.
    """

    y: np.ndarray
    x1: np.ndarray
    x2: np.ndarray
    n1: int
    n2: int
    row_order: np.ndarray
    group_labels: tuple[str, str]
    covariate_names: tuple[str, ...] = ()

    @property
    def n(self) -> int:
        return self.n1 + self.n2

    @property
    def w(self) -> int:
        return self.x2.shape[1]

    @property
    def df(self) -> int:
        return self.n - 2 - self.w


@dataclass(frozen=True)
class GroupSummary:
    """Per-group mean and centered sum of squares on both scales.

    ``ss_*`` are sums of squared deviations from the group mean, not divided
    by any degrees of freedom.
    """

    n_rows: int
    mean_raw: float
    ss_raw: float
    mean_adj: float
    ss_adj: float


@dataclass(frozen=True)
class PartitionedFit:
    """All estimates from fitting the partitioned model."""

    delta1_hat: np.ndarray  # (intercept, group coefficient)
    delta2_hat: np.ndarray  # covariate coefficients, length w
    sigma2_hat: float
    gamma: float  # scaled variance of the group coefficient
    y_star: np.ndarray  # response adjusted for the fitted covariate part
    se_beta1: float
    r_squared: float
    r0_squared: float  # reduced model without the group dummy
    df: int

    @property
    def beta0(self) -> float:
        return float(self.delta1_hat[0])

    @property
    def beta1(self) -> float:
        return float(self.delta1_hat[1])


def coefficient_names(design: PartitionedDesign) -> list[str]:
    """Column names of the full design, in fitting order."""
    return [
        "(intercept)",
        f"group[{design.group_labels[1]}]",
        *design.covariate_names,
    ]


def build_design(ds: Dataset, reference_level: str | None = None) -> PartitionedDesign:
    """Sort a dataset into the partitioned design.

    Group labels map to groups by ascending lexicographic order unless
    ``reference_level`` forces one label to be group 1. Rows keep their
    within-group order; the permutation back to original row indices is
    recorded on the design.

    Raises GroupTooSmallError if either group has fewer than 2 rows,
    InsufficientRowsError if n <= 2 + w, and RankDeficientDesignError
    (naming the column) if the combined design is collinear.
    """
    labels = sorted(set(ds.group_labels))
    if reference_level is not None:
        if reference_level not in labels:
            raise GroupTooSmallError(reference_level, 0)
        labels = [reference_level] + [l for l in labels if l != reference_level]
    g1, g2 = labels

    dummy_orig = np.array([0.0 if l == g1 else 1.0 for l in ds.group_labels])
    order = np.argsort(dummy_orig, kind="stable")
    dummy = dummy_orig[order]
    n1 = int(np.sum(dummy == 0.0))
    n2 = int(np.sum(dummy == 1.0))
    if n1 < 2:
        raise GroupTooSmallError(g1, n1)
    if n2 < 2:
        raise GroupTooSmallError(g2, n2)

    w = ds.n_covariates
    n = n1 + n2
    if n <= 2 + w:
        raise InsufficientRowsError(
            f"{n} rows cannot support an intercept, a group dummy and {w} covariate(s)"
        )

    y = linalg.as_vector(ds.response, "response")[order]
    x1 = np.column_stack([np.ones(n), dummy])
    if w:
        x2 = np.column_stack([linalg.as_vector(col, name)[order]
                              for name, col in ds.covariates])
    else:
        x2 = np.empty((n, 0))

    names = ["(intercept)", f"group[{g2}]"] + [name for name, _ in ds.covariates]
    try:
        linalg.require_full_column_rank(np.hstack([x1, x2]))
    except RankDeficientError as exc:
        col = exc.column
        if isinstance(col, int) and col < len(names):
            col = names[col]
        raise RankDeficientDesignError(col) from None

    return PartitionedDesign(
        y=y, x1=x1, x2=x2, n1=n1, n2=n2, row_order=order,
        group_labels=(g1, g2),
        covariate_names=tuple(name for name, _ in ds.covariates),
    )


def annihilator_group(design: PartitionedDesign) -> np.ndarray:
    """I_n minus the projector onto the intercept+dummy columns.

    Applying this matrix centers a vector within each group; it is block
    diagonal with blocks I - ones/n_j when rows are group-sorted.
    """
    n = design.n
    return np.eye(n) - linalg.projector(design.x1)


def annihilator_covariates(design: PartitionedDesign) -> np.ndarray:
    """I_n minus the projector onto the covariate columns (identity if w=0)."""
    n = design.n
    if design.w == 0:
        return np.eye(n)
    return np.eye(n) - linalg.projector(design.x2)


def delta1_scaled_covariance(design: PartitionedDesign) -> np.ndarray:
    """Inverse of X1' M2 X1: the covariance of the (intercept, group)
    estimates divided by the error variance.

    Its lower-right element is gamma, the scale factor in
    Var(beta1_hat) = sigma^2 * gamma.
    """
    m2 = annihilator_covariates(design)
    s = design.x1.T @ m2 @ design.x1
    s = (s + s.T) / 2.0  # symmetrize away rounding
    return linalg.sym_inverse_2x2(s)


def delta1_from_adjusted(design: PartitionedDesign, y_star) -> np.ndarray:
    """Recover (intercept, group coefficient) by regressing the adjusted
    response on X1 alone; equals the full-design estimates."""
    return linalg.qr_least_squares(design.x1, y_star)


def residual_quadratic_matrix(design: PartitionedDesign) -> np.ndarray:
    """The symmetric idempotent L with y'Ly = residual sum of squares.

    L = M1 - M1 X2 (X2' M1 X2)^-1 X2' M1; it annihilates both X1 and X2 and
    has trace n - 2 - w.
    """
    m1 = annihilator_group(design)
    if design.w == 0:
        return m1
    b = m1 @ design.x2
    g = design.x2.T @ b
    return m1 - b @ np.linalg.solve(g, b.T)


def _group_stats(design: PartitionedDesign, v: np.ndarray):
    """Per-group (mean, centered SS) of a vector in design row order."""
    out = []
    for sl in (slice(0, design.n1), slice(design.n1, design.n)):
        part = v[sl]
        mean = float(part.mean())
        out.append((mean, float(np.sum((part - mean) ** 2))))
    return out


def fit_monolithic(design: PartitionedDesign) -> PartitionedFit:
    """Fit by solving the full design (X1, X2) in a single pass."""
    x = np.hstack([design.x1, design.x2])
    coef = linalg.qr_least_squares(x, design.y)
    return _finish_fit(design, coef[:2], coef[2:])


def fit_fwl(design: PartitionedDesign) -> PartitionedFit:
    """Fit by partialling out: covariate coefficients from the group-centered
    regression, then the group block from the adjusted response.

    With no covariates this is simply the regression of y on X1.
    """
    if design.w:
        m1 = annihilator_group(design)
        delta2 = linalg.qr_least_squares(m1 @ design.x2, m1 @ design.y)
    else:
        delta2 = np.empty(0)
    y_star = design.y - design.x2 @ delta2
    delta1 = delta1_from_adjusted(design, y_star)
    return _finish_fit(design, delta1, delta2)


def _finish_fit(design, delta1, delta2) -> PartitionedFit:
    y_star = design.y - design.x2 @ delta2
    sig2 = sigma2_hat(design, delta2)
    gamma = float(delta1_scaled_covariance(design)[1, 1])
    r2, r02 = r_squared_pair(design)
    return PartitionedFit(
        delta1_hat=np.asarray(delta1, dtype=float),
        delta2_hat=np.asarray(delta2, dtype=float),
        sigma2_hat=sig2,
        gamma=gamma,
        y_star=y_star,
        se_beta1=float(np.sqrt(sig2 * gamma)),
        r_squared=r2,
        r0_squared=r02,
        df=design.df,
    )


def sigma2_hat(design: PartitionedDesign, delta2_hat) -> float:
    """Unbiased error-variance estimate given fitted covariate coefficients.

    Equals r' M1 r / (n - 2 - w) with r = y - X2 d2_hat, evaluated here as
    the pooled within-group centered sum of squares of r (the two forms are
    algebraically identical).
    """
    if design.df <= 0:
        raise NonPositiveDfError(
            f"no residual degrees of freedom (n={design.n}, w={design.w})"
        )
    delta2_hat = np.asarray(delta2_hat, dtype=float)
    r = design.y - design.x2 @ delta2_hat
    (_, ss1), (_, ss2) = _group_stats(design, r)
    return (ss1 + ss2) / design.df


def group_summaries(design: PartitionedDesign, y_star) -> tuple[GroupSummary, GroupSummary]:
    """Means and centered sums of squares per group, on the raw and the
    covariate-adjusted scale."""
    y_star = linalg.as_vector(y_star, "y_star")
    raw = _group_stats(design, design.y)
    adj = _group_stats(design, y_star)
    sizes = (design.n1, design.n2)
    return tuple(
        GroupSummary(n_rows=sizes[j], mean_raw=raw[j][0], ss_raw=raw[j][1],
                     mean_adj=adj[j][0], ss_adj=adj[j][1])
        for j in (0, 1)
    )


def r_squared_pair(design: PartitionedDesign) -> tuple[float, float]:
    """Coefficients of determination of the full model and of the reduced
    model that drops the group dummy (intercept plus covariates only)."""
    y = design.y
    if np.ptp(y) == 0.0:
        raise DegenerateResponseError("response is constant")
    centered = y - y.mean()
    total_ss = float(centered @ centered)
    if total_ss == 0.0:
        raise DegenerateResponseError("response has zero centered sum of squares")

    full = np.hstack([design.x1, design.x2])
    reduced = np.hstack([np.ones((design.n, 1)), design.x2])

    def rss(x):
        p = linalg.projector(x)
        resid = y - p @ y
        return max(float(y @ resid), 0.0)

    r2 = 1.0 - rss(full) / total_ss
    r02 = 1.0 - rss(reduced) / total_ss
    return r2, r02


def standard_errors(design: PartitionedDesign, fit: PartitionedFit) -> np.ndarray:
    """Standard errors of all 2 + w coefficients, in fitting order."""
    x = np.hstack([design.x1, design.x2])
    r = np.linalg.qr(x, mode="r")
    rinv = np.linalg.inv(r)
    diag = np.sum(rinv**2, axis=1)  # diagonal of (X'X)^-1
    return np.sqrt(fit.sigma2_hat * diag)
