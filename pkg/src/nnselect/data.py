"""Tabular data handling: loading, train/test splitting, min-max rescaling.

A :class:`Dataset` is an immutable bundle of a numeric design matrix, a
response vector, and column names. Rescaling is learned on training rows
only and applied to both parts of a split, so test rows may legitimately
fall outside [0, 1].
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np
import pandas as pd


def _round_half_up(x: float) -> int:
    return int(np.floor(x + 0.5))


@dataclass(frozen=True)
class Dataset:
    """Numeric covariates plus a designated response column.

    Parameters
    ----------
    X : ndarray, shape (n, p_all)
        Covariate matrix, one column per covariate.
    y : ndarray, shape (n,)
        Response vector.
    covariate_names : tuple of str
        Column names for ``X``, in column order.
    response_name : str
        Name of the response variable.
    n_rejected : int
        Rows dropped by the loader (missing or unparseable cells).
    """

    X: np.ndarray
    y: np.ndarray
    covariate_names: tuple[str, ...]
    response_name: str
    n_rejected: int = 0

    def __post_init__(self):
        X = np.ascontiguousarray(np.asarray(self.X, dtype=np.float64))
        y = np.asarray(self.y, dtype=np.float64).ravel()
        if X.ndim != 2:
            raise ValueError("X must be a 2-d matrix")
        if X.shape[0] != y.shape[0]:
            raise ValueError(
                f"X has {X.shape[0]} rows but y has {y.shape[0]}"
            )
        names = tuple(str(c) for c in self.covariate_names)
        if len(names) != X.shape[1]:
            raise ValueError("one covariate name required per X column")
        if self.response_name in names:
            raise ValueError("response column must not appear among covariates")
        if not (np.isfinite(X).all() and np.isfinite(y).all()):
            raise ValueError("dataset contains non-finite values")
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "covariate_names", names)

    @property
    def n(self) -> int:
        return self.X.shape[0]

    @property
    def p_all(self) -> int:
        return self.X.shape[1]

    def take(self, rows: np.ndarray) -> "Dataset":
        """Row subset as a new Dataset (loader metadata not carried over)."""
        return Dataset(self.X[rows], self.y[rows], self.covariate_names,
                       self.response_name)

    def column_index(self, name: str) -> int:
        try:
            return self.covariate_names.index(name)
        except ValueError:
            raise KeyError(f"no covariate named {name!r}") from None


def load_csv(path, response_name: str) -> Dataset:
    """Load a comma-separated file with a header row into a Dataset.

    All cells are parsed as numbers; any row containing a missing or
    unparseable cell is dropped and counted in ``Dataset.n_rejected``.
    The loader never alters surviving values.
    """
    frame = pd.read_csv(path)
    if response_name not in frame.columns:
        raise ValueError(
            f"response column {response_name!r} not found in {path} "
            f"(columns: {list(frame.columns)})"
        )
    numeric = frame.apply(pd.to_numeric, errors="coerce")
    keep = numeric.notna().all(axis=1)
    n_rejected = int((~keep).sum())
    numeric = numeric[keep]
    if len(numeric) == 0:
        raise ValueError(f"{path}: no fully-numeric rows survived parsing")
    covariates = [c for c in frame.columns if c != response_name]
    return Dataset(
        X=numeric[covariates].to_numpy(dtype=np.float64),
        y=numeric[response_name].to_numpy(dtype=np.float64),
        covariate_names=tuple(covariates),
        response_name=response_name,
        n_rejected=n_rejected,
    )


def split(data: Dataset, test_fraction: float, seed: int) -> tuple[Dataset, Dataset]:
    """Seeded uniform train/test partition without replacement.

    The test size is ``round(test_fraction * n)`` with halves rounded up.
    Row order within each part follows the original dataset.
    """
    if not 0.0 < test_fraction < 1.0:
        raise ValueError("test_fraction must be strictly between 0 and 1")
    if data.n < 2:
        raise ValueError("need at least 2 rows to split")
    n_test = _round_half_up(test_fraction * data.n)
    if n_test == 0 or n_test == data.n:
        raise ValueError(
            f"test_fraction={test_fraction} gives an empty part for n={data.n}"
        )
    perm = np.random.default_rng(seed).permutation(data.n)
    test_rows = np.sort(perm[:n_test])
    train_rows = np.sort(perm[n_test:])
    return data.take(train_rows), data.take(test_rows)


@dataclass(frozen=True)
class Scaler:
    """Per-column min-max transform learned from training rows.

    Covariates and the response are both rescaled; training values map
    into [0, 1] exactly, values from other data are transformed with the
    same affine map and are deliberately not clipped.
    """

    covariate_min: np.ndarray
    covariate_max: np.ndarray
    response_min: float
    response_max: float
    covariate_names: tuple[str, ...] = field(default=())

    def transform(self, data: Dataset) -> Dataset:
        if data.covariate_names != self.covariate_names:
            raise ValueError("scaler was fit on differently-named columns")
        X = (data.X - self.covariate_min) / (self.covariate_max - self.covariate_min)
        y = (data.y - self.response_min) / (self.response_max - self.response_min)
        return Dataset(X, y, data.covariate_names, data.response_name,
                       data.n_rejected)

    def inverse(self, data: Dataset) -> Dataset:
        X = data.X * (self.covariate_max - self.covariate_min) + self.covariate_min
        y = data.y * (self.response_max - self.response_min) + self.response_min
        return Dataset(X, y, data.covariate_names, data.response_name,
                       data.n_rejected)


def fit_scaler(train: Dataset) -> Scaler:
    """Learn per-column minima and maxima from training rows."""
    if train.n == 0:
        raise ValueError("cannot fit a scaler on an empty dataset")
    cmin = train.X.min(axis=0)
    cmax = train.X.max(axis=0)
    constant = np.flatnonzero(cmax <= cmin)
    if constant.size:
        names = [train.covariate_names[i] for i in constant]
        raise ValueError(f"constant column(s) cannot be rescaled: {names}")
    ymin = float(train.y.min())
    ymax = float(train.y.max())
    if ymax <= ymin:
        raise ValueError(
            f"constant column(s) cannot be rescaled: [{train.response_name!r}]"
        )
    return Scaler(cmin, cmax, ymin, ymax, train.covariate_names)


def apply_scaler(scaler: Scaler, data: Dataset) -> Dataset:
    """Transform a dataset with a fitted scaler (no clipping)."""
    return scaler.transform(data)
