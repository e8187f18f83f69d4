"""
Insurance case study
====================

The embedded dataset (58 monthly unemployment-insurance figures) is
right-skewed with a handful of large values -- exactly the shape the
heavy-tailed model targets.  Fit all candidate models, rank them, and put
empirical and model-based tail risk side by side.
"""

import numpy as np

from arctangr import (
    compare_models,
    describe,
    empirical_risk_curve,
    fit_agr,
    ingest,
    plot_bundle,
    risk_curve,
)

data = ingest("embedded:insurance")
stats = describe(data)
print(f"n = {stats.n}, mean = {stats.mean:.4f}, median = {stats.median:.4f}, "
      f"max = {stats.max:.3f}")
print(f"Bowley skewness = {stats.bowley_skewness:+.4f} (right-skewed), "
      f"Moors kurtosis = {stats.moors_kurtosis:.4f}\n")

# Model comparison: lower criteria are better, higher log-likelihood is
# better.  On this sample the Laplace kernel edges out the arctan variant;
# both dominate the Gaussian by a wide margin.
table = compare_models(data)
print(table.to_text())

# Tail risk, empirically and under the fitted heavy-tailed model.  With 58
# points the empirical estimator runs out of exceedances at 99% (only one
# observation sits above that quantile), so the empirical grid stops at
# 0.95 -- the model-based grid has no such limit.
print(empirical_risk_curve(data, [0.75, 0.80, 0.85, 0.90, 0.95]).to_text())

fitted = fit_agr(data).params
print(risk_curve(fitted, [0.75, 0.80, 0.85, 0.90, 0.95, 0.99]).to_text())

# Everything a plotting tool needs, as plain data.
bundle = plot_bundle(data)
print(bundle.to_text())
hist = bundle.histogram
peak_bin = int(np.argmax(hist["counts"]))
print(f"modal histogram bin: [{hist['bin_edges'][peak_bin]:.3f}, "
      f"{hist['bin_edges'][peak_bin + 1]:.3f})")

# The fitted heavy-tailed density keeps far more mass out where the big
# claims live than the Gaussian does.
grid = np.asarray(bundle.density["x"])
far = grid >= 0.2
agr_mass = np.trapezoid(np.asarray(bundle.density["curves"]["agr"])[far], grid[far])
gauss_mass = np.trapezoid(np.asarray(bundle.density["curves"]["gaussian"])[far], grid[far])
print(f"mass beyond 0.2: arctan-GR {agr_mass:.2e} vs gaussian {gauss_mass:.2e} "
      f"({agr_mass / gauss_mass:.0f}x heavier)")
