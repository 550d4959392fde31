"""Bundled application datasets.

Three classic regression tables are used by the application examples and
the acceptance suite:

* **Boston housing** (506 communities, 12 covariates, response ``medv``):
  the Harrison & Rubinfeld (1978) data as distributed with the ISLR2
  book's companion site (the variant without the ``b`` column).
  Source: https://www.statlearning.com/s/Boston.csv
* **Wine quality, red and white** (1599 / 4898 samples, 11 covariates,
  response ``quality``): Cortez et al. (2009), UCI Machine Learning
  Repository id 186.
  Source: https://archive.ics.uci.edu/static/public/186/wine+quality.zip

The CSV fixtures are not committed to the repository; run
``python -m nnselect.datasets`` once (network required) to download and
normalize them into this package directory. Loaders validate the exact
published shape so a wrong or truncated file fails loudly.
"""

from __future__ import annotations

import io
import urllib.request
import zipfile
from pathlib import Path

from ..data import Dataset, load_csv

_DIR = Path(__file__).parent

BOSTON_URL = "https://www.statlearning.com/s/Boston.csv"
WINE_URL = "https://archive.ics.uci.edu/static/public/186/wine+quality.zip"

BOSTON_COLUMNS = ("crim", "zn", "indus", "chas", "nox", "rm", "age", "dis",
                  "rad", "tax", "ptratio", "lstat", "medv")

# UCI column headers mapped to compact report-friendly names
WINE_RENAME = {
    "fixed acidity": "fixed",
    "volatile acidity": "vol",
    "citric acid": "cit",
    "residual sugar": "sugar",
    "chlorides": "chl",
    "free sulfur dioxide": "fsulfur",
    "total sulfur dioxide": "tsulfur",
    "density": "den",
    "pH": "pH",
    "sulphates": "sulphate",
    "alcohol": "alco",
    "quality": "quality",
}

_EXPECTED = {
    "boston": ("boston.csv", "medv", 506, 12),
    "red_wine": ("winequality_red.csv", "quality", 1599, 11),
    "white_wine": ("winequality_white.csv", "quality", 4898, 11),
}


def dataset_path(name: str) -> Path:
    if name not in _EXPECTED:
        raise KeyError(f"unknown dataset {name!r}; have {sorted(_EXPECTED)}")
    return _DIR / _EXPECTED[name][0]


def load_dataset(name: str) -> Dataset:
    """Load a bundled dataset by name and validate its published shape."""
    if name not in _EXPECTED:
        raise KeyError(f"unknown dataset {name!r}; have {sorted(_EXPECTED)}")
    filename, response, n, p = _EXPECTED[name]
    path = _DIR / filename
    if not path.exists():
        raise FileNotFoundError(
            f"{path} is missing. The {name} fixture is fetched, not "
            f"committed; run `python -m nnselect.datasets` once with "
            f"network access to download it (see the module docstring "
            f"for provenance)."
        )
    data = load_csv(path, response)
    if (data.n, data.p_all) != (n, p):
        raise ValueError(
            f"{path} has shape ({data.n} rows, {data.p_all} covariates); "
            f"the published {name} table has ({n}, {p})"
        )
    return data


def load_boston() -> Dataset:
    return load_dataset("boston")


def load_red_wine() -> Dataset:
    return load_dataset("red_wine")


def load_white_wine() -> Dataset:
    return load_dataset("white_wine")


def available() -> dict[str, bool]:
    """Which fixtures are present on disk."""
    return {name: (_DIR / spec[0]).exists()
            for name, spec in _EXPECTED.items()}


def fetch(timeout: float = 60.0) -> None:
    """Download and normalize the three fixtures into the package.

    Boston is stored as published. The wine tables are converted from
    semicolon-separated UCI form to comma-separated form with the compact
    column names used in the reports.
    """
    import pandas as pd

    boston = _DIR / "boston.csv"
    if not boston.exists():
        with urllib.request.urlopen(BOSTON_URL, timeout=timeout) as resp:
            raw = resp.read()
        frame = pd.read_csv(io.BytesIO(raw))
        drop = [c for c in frame.columns if c.lower().startswith("unnamed")]
        frame = frame.drop(columns=drop)
        if tuple(frame.columns) != BOSTON_COLUMNS:
            raise ValueError(f"unexpected Boston columns: {list(frame.columns)}")
        frame.to_csv(boston, index=False)
        print(f"wrote {boston} ({len(frame)} rows)")

    red = _DIR / "winequality_red.csv"
    white = _DIR / "winequality_white.csv"
    if not (red.exists() and white.exists()):
        with urllib.request.urlopen(WINE_URL, timeout=timeout) as resp:
            archive = zipfile.ZipFile(io.BytesIO(resp.read()))
        for member, target in [("winequality-red.csv", red),
                               ("winequality-white.csv", white)]:
            frame = pd.read_csv(archive.open(member), sep=";")
            frame = frame.rename(columns=WINE_RENAME)
            if set(frame.columns) != set(WINE_RENAME.values()):
                raise ValueError(f"unexpected wine columns: {list(frame.columns)}")
            frame.to_csv(target, index=False)
            print(f"wrote {target} ({len(frame)} rows)")
