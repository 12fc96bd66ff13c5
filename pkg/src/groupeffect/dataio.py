"""Ingestion of delimited text files into analysis-ready datasets.

Files are parsed with RFC-4180 quoting rules and a configurable delimiter
(default ';', which is what semicolon-delimited survey exports such as the
UCI student files use). The caller declares which columns are the response,
the binary group factor and the numeric covariates; nothing is inferred.
Rows with a missing or non-numeric cell in any selected column are dropped
and counted.
"""

from __future__ import annotations

import csv
import re
from dataclasses import dataclass

import numpy as np

from .errors import (
    EmptyAfterFilteringError,
    MissingColumnError,
    NotBinaryGroupError,
    UnsortedEdgesError,
)

__all__ = ["Dataset", "load_csv", "load_column", "histogram"]

# plain integer and decimal literals only; anything else drops the row
_NUMERIC_RE = re.compile(r"^[+-]?(\d+\.?\d*|\.\d+)$")


@dataclass(frozen=True)
class Dataset:
    """Parsed tabular data for a two-group comparison.

    ``covariates`` is an ordered tuple of (name, values) pairs; it may be
    empty, in which case the analysis reduces to the classic two-sample
    setting.
    """

    response: np.ndarray
    group_labels: tuple[str, ...]
    covariates: tuple[tuple[str, np.ndarray], ...] = ()
    dropped_rows: int = 0
    source: str = "<memory>"

    def __post_init__(self):
        n = len(self.response)
        if len(self.group_labels) != n or any(
            len(col) != n for _, col in self.covariates
        ):
            raise ValueError("response, group and covariate columns differ in length")
        if n < 4:
            raise EmptyAfterFilteringError(
                f"only {n} usable row(s) in {self.source}; need at least 4"
            )
        labels = sorted(set(self.group_labels))
        if len(labels) != 2:
            raise NotBinaryGroupError(labels)

    @property
    def n_rows(self) -> int:
        return len(self.response)

    @property
    def n_covariates(self) -> int:
        return len(self.covariates)


def _parse_number(cell: str) -> float | None:
    cell = cell.strip()
    if not _NUMERIC_RE.match(cell):
        return None
    return float(cell)


def load_csv(
    path,
    response_col: str,
    group_col: str,
    covariate_cols=(),
    delimiter: str = ";",
) -> Dataset:
    """Load selected columns of a delimited text file into a Dataset.

    Parameters
    ----------
    path : str or path-like
        File with a header row, UTF-8 encoded.
    response_col, group_col : str
        Header names of the numeric response and the binary group factor.
    covariate_cols : sequence of str
        Header names of numeric covariate columns (may be empty).
    delimiter : str
        Field separator, default ';'.

    Rows with an empty or unparseable cell in any selected column are
    dropped; the count is recorded on the returned Dataset. Loading is
    deterministic: identical bytes produce an identical Dataset.
    """
    covariate_cols = list(covariate_cols)
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh, delimiter=delimiter)
        try:
            header = next(reader)
        except StopIteration:
            raise EmptyAfterFilteringError(f"{path} is empty") from None
        index = {name: i for i, name in enumerate(header)}
        for name in [response_col, group_col, *covariate_cols]:
            if name not in index:
                raise MissingColumnError(name)
        want = [index[response_col], index[group_col]] + [
            index[c] for c in covariate_cols
        ]

        response, labels = [], []
        cov_values = [[] for _ in covariate_cols]
        dropped = 0
        for row in reader:
            if len(row) <= max(want):
                dropped += 1
                continue
            y = _parse_number(row[want[0]])
            group = row[want[1]]
            covs = [_parse_number(row[j]) for j in want[2:]]
            if y is None or group == "" or any(v is None for v in covs):
                dropped += 1
                continue
            response.append(y)
            labels.append(group)
            for store, v in zip(cov_values, covs):
                store.append(v)

    if not response:
        raise EmptyAfterFilteringError(
            f"no usable rows in {path} after dropping {dropped} incomplete row(s)"
        )
    return Dataset(
        response=np.array(response),
        group_labels=tuple(labels),
        covariates=tuple(
            (name, np.array(vals)) for name, vals in zip(covariate_cols, cov_values)
        ),
        dropped_rows=dropped,
        source=str(path),
    )


def load_column(path, column: str, delimiter: str = ";") -> tuple[np.ndarray, int]:
    """Read one numeric column, dropping unparseable cells.

    Returns (values, dropped_count). Same parsing rules as load_csv.
    """
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh, delimiter=delimiter)
        try:
            header = next(reader)
        except StopIteration:
            raise EmptyAfterFilteringError(f"{path} is empty") from None
        if column not in header:
            raise MissingColumnError(column)
        j = header.index(column)
        values, dropped = [], 0
        for row in reader:
            v = _parse_number(row[j]) if len(row) > j else None
            if v is None:
                dropped += 1
            else:
                values.append(v)
    if not values:
        raise EmptyAfterFilteringError(
            f"no usable values in column {column!r} of {path}"
        )
    return np.array(values), dropped


def histogram(values, bin_edges) -> list[int]:
    """Counts per half-open bin [e_i, e_i+1); the last bin is closed.

    ``bin_edges`` must be strictly increasing with at least two entries.
    The counts sum to the number of in-range values.
    """
    edges = np.asarray(bin_edges, dtype=float)
    if edges.ndim != 1 or edges.size < 2 or not np.all(np.diff(edges) > 0):
        raise UnsortedEdgesError(
            "bin edges must be a strictly increasing sequence of length >= 2"
        )
    vals = np.asarray(values, dtype=float)
    counts, _ = np.histogram(vals, bins=edges)
    return [int(c) for c in counts]
