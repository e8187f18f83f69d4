"""Plot-ready data bundles: histogram, box plot, fitted densities, risk curves.

Figures are emitted as data grids rather than rendered images so any
plotting tool can consume them.  Density columns come from whichever
candidate models fit the data; models whose support excludes the data are
skipped with a note instead of failing the whole bundle.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .dataset import LossDataset
from .distributions import agr_pdf, gaussian_pdf, mixture_kernel_pdf, rayleigh_pdf
from .errors import DataError, DomainError
from .fit import fit_agr, fit_gaussian, fit_laplace, fit_rayleigh
from .risk import risk_curve

_DENSITY_FNS = {
    "agr": (fit_agr, agr_pdf),
    "gaussian": (fit_gaussian, gaussian_pdf),
    "rayleigh": (fit_rayleigh, rayleigh_pdf),
    "laplace": (fit_laplace, mixture_kernel_pdf),
}

DEFAULT_ALPHAS = tuple(np.linspace(0.55, 0.99, 45).round(12))


@dataclass(frozen=True)
class PlotBundle:
    """Numeric payloads for the standard diagnostic figures."""

    histogram: dict
    boxplot: dict
    density: dict
    risk: dict
    skipped_models: dict = field(default_factory=dict)

    def __post_init__(self):
        edges = np.asarray(self.histogram["bin_edges"])
        counts = np.asarray(self.histogram["counts"])
        if counts.sum() != self.histogram["n"]:
            raise DomainError("histogram counts must sum to the sample size")
        if edges.size != counts.size + 1:
            raise DomainError("histogram needs one more edge than counts")
        grid = np.asarray(self.density["x"])
        if not np.all(np.diff(grid) > 0):
            raise DomainError("density grid must be strictly increasing")
        for name, col in self.density["curves"].items():
            if np.any(np.asarray(col) < 0):
                raise DomainError(f"density column {name!r} has negative values")

    def to_json(self) -> str:
        payload = {
            "histogram": self.histogram,
            "boxplot": self.boxplot,
            "density": self.density,
            "risk": self.risk,
            "skipped_models": self.skipped_models,
        }
        return json.dumps(payload, indent=2) + "\n"

    def to_text(self, digits: int = 6) -> str:
        five = self.boxplot["five_number"]
        lines = [
            f"plot bundle: n={self.histogram['n']}, "
            f"{len(self.histogram['counts'])} histogram bins",
            "five-number summary: "
            + ", ".join(f"{k}={five[k]:.{digits}g}" for k in ("min", "q1", "median", "q3", "max")),
            f"outliers beyond 1.5*IQR: {len(self.boxplot['outliers'])}",
            f"density curves: {', '.join(sorted(self.density['curves']))} "
            f"on {len(self.density['x'])} grid points",
            f"risk curve: {len(self.risk['alpha'])} confidence levels "
            f"({self.risk['alpha'][0]:g} .. {self.risk['alpha'][-1]:g})",
        ]
        if self.skipped_models:
            for name, reason in sorted(self.skipped_models.items()):
                lines.append(f"skipped {name}: {reason}")
        return "\n".join(lines) + "\n"


def plot_bundle(data: LossDataset, bins=None, alphas=DEFAULT_ALPHAS, grid_points=401) -> PlotBundle:
    """Assemble histogram/boxplot/density/risk data for one dataset.

    ``bins=None`` selects the Freedman-Diaconis rule; pass an integer to
    override.  Risk curves use the fitted AGR parameters.
    """
    x = data.values
    counts, edges = np.histogram(x, bins=("fd" if bins is None else int(bins)))
    histogram = {
        "n": int(x.size),
        "bin_edges": edges.tolist(),
        "counts": counts.tolist(),
    }

    q1, med, q3 = np.quantile(x, [0.25, 0.5, 0.75])
    iqr = q3 - q1
    lo_fence, hi_fence = q1 - 1.5 * iqr, q3 + 1.5 * iqr
    outliers = x[(x < lo_fence) | (x > hi_fence)]
    boxplot = {
        "five_number": {
            "min": float(x.min()),
            "q1": float(q1),
            "median": float(med),
            "q3": float(q3),
            "max": float(x.max()),
        },
        "fences": {"low": float(lo_fence), "high": float(hi_fence)},
        "outliers": sorted(float(v) for v in outliers),
    }

    span = float(x.max() - x.min()) or 1.0
    grid = np.linspace(x.min() - 0.25 * span, x.max() + 0.25 * span, int(grid_points))
    curves = {}
    skipped = {}
    agr_params = None
    for name, (fitter, density) in _DENSITY_FNS.items():
        try:
            result = fitter(x)
        except DataError as exc:
            skipped[name] = str(exc)
            continue
        curves[name] = np.asarray(density(result.params, grid)).tolist()
        if name == "agr":
            agr_params = result.params
    density_block = {"x": grid.tolist(), "curves": curves}

    if agr_params is None:
        raise DataError("cannot build risk curves: AGR fit failed")
    report = risk_curve(agr_params, list(alphas))
    risk_block = {
        "params": {"omega": agr_params.omega, "psi": agr_params.psi},
        "alpha": [row.alpha for row in report.rows],
        "var": [row.var for row in report.rows],
        "tvar": [row.tvar for row in report.rows],
        "tv": [row.tv for row in report.rows],
    }

    return PlotBundle(
        histogram=histogram,
        boxplot=boxplot,
        density=density_block,
        risk=risk_block,
        skipped_models=skipped,
    )
