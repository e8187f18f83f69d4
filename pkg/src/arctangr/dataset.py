"""Loss-dataset ingestion and descriptive statistics.

Datasets are one numeric column: either a CSV/newline-delimited file or the
embedded unemployment-insurance sample (58 monthly observations of first
unemployment-insurance checks issued to former federal employees, Maryland,
July 2008 - April 2013) available under the source spec
``embedded:insurance``.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np

from .errors import DataError

EMBEDDED_PREFIX = "embedded:"
EMBEDDED_INSURANCE = "embedded:insurance"

#: Monthly "first unemployment-insurance checks issued" figures (n = 58).
INSURANCE_VALUES = (
    0.052, 0.033, 0.039, 0.050, 0.029, 0.052, 0.060, 0.032, 0.057, 0.064,
    0.061, 0.064, 0.041, 0.036, 0.050, 0.053, 0.061, 0.068, 0.060, 0.050,
    0.064, 0.057, 0.061, 0.059, 0.069, 0.070, 0.137, 0.170, 0.100, 0.090,
    0.222, 0.109, 0.068, 0.063, 0.056, 0.090, 0.074, 0.095, 0.114, 0.133,
    0.066, 0.075, 0.072, 0.054, 0.057, 0.052, 0.066, 0.069, 0.083, 0.044,
    0.060, 0.080, 0.058, 0.080, 0.080, 0.052, 0.065, 0.073,
)


@dataclass
class LossDataset:
    """An ordered sample of finite real-valued losses with provenance."""

    values: np.ndarray
    source: str
    name: str

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=float)
        if arr.ndim != 1 or arr.size == 0:
            raise DataError(f"dataset {self.name!r} must be a nonempty 1-d sample")
        if not np.isfinite(arr).all():
            raise DataError(f"dataset {self.name!r} contains NaN or infinite values")
        arr = arr.copy()
        arr.flags.writeable = False
        self.values = arr

    @property
    def n(self) -> int:
        return int(self.values.size)

    @cached_property
    def sorted_values(self) -> np.ndarray:
        out = np.sort(self.values)
        out.flags.writeable = False
        return out


def ingest(source) -> LossDataset:
    """Load a dataset from a file path or an ``embedded:`` spec.

    Files may carry one optional header line; every other non-blank line
    must parse as a single finite number (one CSV field or a bare value).
    Parse failures report the 1-based line number.
    """
    spec = str(source)
    if spec.startswith(EMBEDDED_PREFIX):
        if spec != EMBEDDED_INSURANCE:
            raise DataError(
                f"unknown embedded dataset {spec!r}; available: {EMBEDDED_INSURANCE}"
            )
        return LossDataset(
            values=np.array(INSURANCE_VALUES), source=spec, name="insurance"
        )

    path = Path(spec)
    if not path.is_file():
        raise DataError(f"no such data file: {spec}")
    try:
        text = path.read_text(encoding="utf-8-sig")
    except UnicodeDecodeError as exc:
        raise DataError(f"{spec} is not UTF-8 text: {exc}") from exc

    values: list[float] = []
    saw_row = False
    for lineno, row in enumerate(csv.reader(text.splitlines()), start=1):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != 1:
            raise DataError(
                f"{spec} line {lineno}: expected a single column, got {len(row)} fields"
            )
        token = row[0].strip()
        try:
            value = float(token)
        except ValueError:
            if not saw_row:
                saw_row = True  # optional header
                continue
            raise DataError(f"{spec} line {lineno}: cannot parse {token!r} as a number")
        if not np.isfinite(value):
            raise DataError(f"{spec} line {lineno}: non-finite value {token!r}")
        saw_row = True
        values.append(value)

    if not values:
        raise DataError(f"{spec} contains no numeric values")
    return LossDataset(values=np.array(values), source=spec, name=path.stem)


@dataclass(frozen=True)
class SummaryStats:
    """Descriptive statistics of a loss sample.

    Skewness and kurtosis are the quantile-based Bowley/Moors measures so
    they stay comparable to the model's shape measures.
    """

    n: int
    mean: float
    median: float
    sd: float
    min: float
    max: float
    q1: float
    q3: float
    bowley_skewness: float
    moors_kurtosis: float

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "mean": self.mean,
            "median": self.median,
            "sd": self.sd,
            "min": self.min,
            "max": self.max,
            "q1": self.q1,
            "q3": self.q3,
            "bowley_skewness": self.bowley_skewness,
            "moors_kurtosis": self.moors_kurtosis,
        }


def describe(data: LossDataset) -> SummaryStats:
    """Summary statistics; SD is the population standard deviation."""
    x = data.values
    octiles = np.quantile(x, [0.125, 0.25, 0.375, 0.5, 0.625, 0.75, 0.875])
    e1, q1, e3, med, e5, q3, e7 = octiles
    iqr = q3 - q1
    if iqr > 0:
        bowley = (q1 + q3 - 2.0 * med) / iqr
        moors = (e7 - e5 + e3 - e1) / iqr
    else:
        bowley = 0.0
        moors = 0.0
    return SummaryStats(
        n=data.n,
        mean=float(x.mean()),
        median=float(med),
        sd=float(x.std(ddof=0)),
        min=float(x.min()),
        max=float(x.max()),
        q1=float(q1),
        q3=float(q3),
        bowley_skewness=float(bowley),
        moors_kurtosis=float(moors),
    )
