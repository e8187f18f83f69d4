"""
Tour of the arctan Gaussian-Rayleigh distribution
=================================================

Construct a distribution, evaluate its functions, check them against each
other, and draw reproducible samples.
"""

import numpy as np

from arctangr import (
    P_STAR,
    ArctanGRParams,
    agr_cdf,
    agr_cum_hazard,
    agr_hazard,
    agr_kurtosis,
    agr_moment,
    agr_pdf,
    agr_quantile,
    agr_sample,
    agr_skewness,
    agr_survival,
)

params = ArctanGRParams(omega=0.0, psi=1.0)

# The CDF at the location is not 1/2: the distribution puts ~59% of its
# mass below omega.
print(f"G(omega) = {agr_cdf(params, 0.0):.10f}  (P_STAR = {P_STAR:.10f})")
print(f"median    = {agr_quantile(params, 0.5):+.6f}  (below the location)")
print(f"mean      = {agr_moment(params, 1):+.6f}")

# Density: peak at the location, asymmetric exponential-style tails.
for x in (-3.0, -1.0, 0.0, 1.0, 3.0):
    print(f"  pdf({x:+.0f}) = {agr_pdf(params, x):.6f}")

# Quantile round trip should be exact to ~1e-10 even far into the tails.
probs = np.array([1e-6, 0.25, 0.5, P_STAR, 0.9, 1 - 1e-6])
back = agr_cdf(params, agr_quantile(params, probs))
print("round-trip error:", np.abs(back - probs).max())

# Quantile-based shape measures are location/scale free.
print(f"skewness = {agr_skewness(params):+.6f} (same for any omega, psi)")
print(f"kurtosis = {agr_kurtosis(params):+.6f}")

# Survival stays meaningful deep in the tail, and the hazard rate
# flattens to 1/psi -- the signature of the exponential-type upper tail.
for k in (5, 20, 40):
    print(f"  survival(omega + {k:2d} psi) = {agr_survival(params, float(k)):.3e}"
          f"   hazard = {agr_hazard(params, float(k)):.6f}")
print(f"cumulative hazard at omega: {agr_cum_hazard(params, 0.0):.6f}")

# Sampling is inverse-transform with an explicit seed: same seed, same draws.
draws = agr_sample(params, 200_000, seed=7)
again = agr_sample(params, 200_000, seed=7)
assert np.array_equal(draws, again)
print(f"sample mean ~ {draws.mean():+.4f}, sample median ~ {np.median(draws):+.4f}")
print(f"empirical P(X <= omega) = {(draws <= 0).mean():.4f}  vs P_STAR = {P_STAR:.4f}")
