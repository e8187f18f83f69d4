"""Concrete distributions: Gaussian, Rayleigh, their scale mixture, and the
arctan Gaussian-Rayleigh (AGR) distribution.

A Gaussian ``N(omega, eta^2)`` whose standard deviation ``eta`` is itself
Rayleigh-distributed with scale ``psi`` mixes, by the law of total
probability, into a Laplace kernel:

    h(x) = exp(-|x - omega| / psi) / (2 psi)

Pushing that kernel through the arctan transform gives the AGR
distribution with CDF

    G(x) = (4/pi) * arctan(1 - exp(-(x - omega)/psi) / 2)   for x >= omega
    G(x) = (4/pi) * arctan(exp(-(omega - x)/psi) / 2)       for x <  omega

and density (the derivative of G; both branches meet at ``8/(5 pi psi)``)

    g(x) = (2/(pi psi)) * e^{-u} / (1 + (1 - e^{-u}/2)^2)   u = (x-omega)/psi >= 0
    g(x) = (8/(pi psi)) * t / (4 + t^2)                     t = e^{-(omega-x)/psi}, x < omega

``G(omega) = (4/pi) * arctan(1/2)`` (exported as ``P_STAR``) is the
probability level at which the quantile function switches branches.

All operations are pure; the sampler takes an explicit seed, so callers own
all randomness (see :func:`agr_sample` for the stream-splitting convention).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import ndtr, ndtri

from ._quadrature import adaptive_quad
from ._util import as_float_array, match_input
from .arctanx import FOUR_OVER_PI, BaseDistribution
from .errors import DomainError

#: CDF value at the location parameter, (4/pi) * arctan(1/2) ~= 0.5903345.
#: Quantile lookups below this level land below the location, at or above it
#: they land at or above the location.
P_STAR = FOUR_OVER_PI * math.atan(0.5)

# tail probability above the location, and its -log, used by risk integrals
Q_STAR = 1.0 - P_STAR
S_STAR = -math.log(Q_STAR)

_PI_OVER_4 = math.pi / 4.0


@dataclass(frozen=True)
class GaussianParams:
    """Mean and standard deviation of a Gaussian."""

    omega: float
    eta: float

    def __post_init__(self):
        if not np.isfinite(self.omega):
            raise DomainError(f"omega must be finite, got {self.omega}")
        if not (np.isfinite(self.eta) and self.eta > 0):
            raise DomainError(f"eta must be a positive finite scale, got {self.eta}")


@dataclass(frozen=True)
class RayleighParams:
    """Scale of a Rayleigh distribution (support x >= 0)."""

    psi: float

    def __post_init__(self):
        if not (np.isfinite(self.psi) and self.psi > 0):
            raise DomainError(f"psi must be a positive finite scale, got {self.psi}")


@dataclass(frozen=True)
class ArctanGRParams:
    """Location and scale of the arctan Gaussian-Rayleigh distribution.

    ``omega`` and ``psi`` are in data units; ``psi`` is also the scale of the
    underlying Laplace mixture kernel.
    """

    omega: float
    psi: float

    def __post_init__(self):
        if not np.isfinite(self.omega):
            raise DomainError(f"omega must be finite, got {self.omega}")
        if not (np.isfinite(self.psi) and self.psi > 0):
            raise DomainError(f"psi must be a positive finite scale, got {self.psi}")


# ---------------------------------------------------------------------------
# Gaussian and Rayleigh closed forms
# ---------------------------------------------------------------------------

def gaussian_pdf(params: GaussianParams, x):
    arr = as_float_array(x)
    z = (arr - params.omega) / params.eta
    return match_input(x, np.exp(-0.5 * z * z) / (params.eta * math.sqrt(2 * math.pi)))


def gaussian_cdf(params: GaussianParams, x):
    arr = as_float_array(x)
    return match_input(x, ndtr((arr - params.omega) / params.eta))


def gaussian_quantile(params: GaussianParams, p):
    arr = _checked_prob(p)
    return match_input(p, params.omega + params.eta * ndtri(arr))


def gaussian_logpdf(params: GaussianParams, x):
    arr = as_float_array(x)
    z = (arr - params.omega) / params.eta
    out = -0.5 * z * z - math.log(params.eta) - 0.5 * math.log(2 * math.pi)
    return match_input(x, out)


def rayleigh_pdf(params: RayleighParams, x):
    arr = as_float_array(x)
    z = np.maximum(arr, 0.0) / params.psi
    out = np.where(arr > 0, z / params.psi * np.exp(-0.5 * z * z), 0.0)
    return match_input(x, out)


def rayleigh_cdf(params: RayleighParams, x):
    arr = as_float_array(x)
    z = np.maximum(arr, 0.0) / params.psi
    return match_input(x, -np.expm1(-0.5 * z * z))


def rayleigh_quantile(params: RayleighParams, p):
    arr = _checked_prob(p)
    return match_input(p, params.psi * np.sqrt(-2.0 * np.log1p(-arr)))


def rayleigh_logpdf(params: RayleighParams, x):
    """Log density; ``-inf`` off the support (x <= 0)."""
    arr = as_float_array(x)
    pos = arr > 0
    z = np.where(pos, arr, 1.0) / params.psi
    out = np.where(pos, np.log(z / params.psi) - 0.5 * z * z, -np.inf)
    return match_input(x, out)


def _checked_prob(p, name="p"):
    arr = as_float_array(p, name=name)
    if np.any((arr <= 0.0) | (arr >= 1.0)):
        raise DomainError(f"{name} must lie strictly inside (0, 1)")
    return arr


# ---------------------------------------------------------------------------
# Gaussian-Rayleigh scale mixture (Laplace kernel)
# ---------------------------------------------------------------------------

def mixture_kernel_pdf(params: ArctanGRParams, x):
    """Closed form of the Gaussian-Rayleigh scale mixture density.

    ``exp(-|x - omega| / psi) / (2 psi)`` -- a Laplace density with location
    ``omega`` and scale ``psi``.
    """
    arr = as_float_array(x)
    u = np.abs(arr - params.omega) / params.psi
    return match_input(x, np.exp(-u) / (2.0 * params.psi))


def mixture_kernel_cdf(params: ArctanGRParams, x):
    arr = as_float_array(x)
    u = (arr - params.omega) / params.psi
    upper = 1.0 - 0.5 * np.exp(-np.maximum(u, 0.0))
    lower = 0.5 * np.exp(np.minimum(u, 0.0))
    return match_input(x, np.where(u >= 0.0, upper, lower))


def mixture_kernel_logpdf(params: ArctanGRParams, x):
    arr = as_float_array(x)
    u = np.abs(arr - params.omega) / params.psi
    return match_input(x, -u - math.log(2.0 * params.psi))


def mixture_kernel_quantile(params: ArctanGRParams, p):
    arr = _checked_prob(p)
    lower = params.omega + params.psi * np.log(2.0 * arr)
    upper = params.omega - params.psi * np.log(2.0 * (1.0 - arr))
    return match_input(p, np.where(arr < 0.5, lower, upper))


def mixture_kernel_pdf_by_integration(params: ArctanGRParams, x):
    """Evaluate the scale-mixture density by direct numeric integration.

    Integrates the conditional Gaussian density against the Rayleigh weight
    over all scales, i.e. the definition of the mixture, without using the
    closed form.  Exists purely as a verification oracle for
    :func:`mixture_kernel_pdf`; the integration variable is rescaled by
    ``psi`` and the range is split at the integrand's saddle so adaptive
    quadrature cannot miss the mass.
    """
    arr = as_float_array(x, require_finite=True)
    if arr.ndim > 0:
        out = np.array([mixture_kernel_pdf_by_integration(params, float(v)) for v in arr])
        return out

    d = (float(arr) - params.omega) / params.psi
    dd = d * d

    def integrand(s):
        return math.exp(-dd / (2.0 * s * s) - 0.5 * s * s) if s > 0 else 0.0

    split = max(1.0, math.sqrt(abs(d)))
    total = 0.0
    for a, b in ((0.0, split), (split, np.inf)):
        value, _ = adaptive_quad(
            integrand, a, b, epsabs=1e-14, epsrel=1e-11, label="mixture kernel density"
        )
        total += value
    return match_input(x, total / (params.psi * math.sqrt(2.0 * math.pi)))


# ---------------------------------------------------------------------------
# BaseDistribution adapters for the generic arctan transform
# ---------------------------------------------------------------------------

def gaussian_base(params: GaussianParams) -> BaseDistribution:
    return BaseDistribution(
        cdf=lambda x: gaussian_cdf(params, x),
        pdf=lambda x: gaussian_pdf(params, x),
        support=(-np.inf, np.inf),
        param_count=2,
    )


def rayleigh_base(params: RayleighParams) -> BaseDistribution:
    return BaseDistribution(
        cdf=lambda x: rayleigh_cdf(params, x),
        pdf=lambda x: rayleigh_pdf(params, x),
        support=(0.0, np.inf),
        param_count=1,
    )


def mixture_kernel_base(params: ArctanGRParams) -> BaseDistribution:
    return BaseDistribution(
        cdf=lambda x: mixture_kernel_cdf(params, x),
        pdf=lambda x: mixture_kernel_pdf(params, x),
        support=(-np.inf, np.inf),
        param_count=2,
    )


# ---------------------------------------------------------------------------
# Arctan Gaussian-Rayleigh distribution
# ---------------------------------------------------------------------------

def agr_cdf(params: ArctanGRParams, x):
    """CDF of the AGR distribution; accepts +-inf and returns the limits."""
    arr = as_float_array(x)
    u = (arr - params.omega) / params.psi
    upper = 1.0 - 0.5 * np.exp(-np.maximum(u, 0.0))
    lower = 0.5 * np.exp(np.minimum(u, 0.0))
    h = np.where(u >= 0.0, upper, lower)
    return match_input(x, FOUR_OVER_PI * np.arctan(h))


def agr_survival(params: ArctanGRParams, x):
    """Survival function ``1 - G(x)``, accurate deep into the upper tail.

    For ``x >= omega`` the naive ``1 - cdf`` cancels catastrophically once
    the survival drops below ~1e-16, so the upper branch uses the identity
    ``pi/4 - arctan(1 - z) = arctan(z / (2 - z))``.
    """
    arr = as_float_array(x)
    u = (arr - params.omega) / params.psi
    z = 0.5 * np.exp(-np.maximum(u, 0.0))
    upper = FOUR_OVER_PI * np.arctan(z / (2.0 - z))
    lower = 1.0 - FOUR_OVER_PI * np.arctan(0.5 * np.exp(np.minimum(u, 0.0)))
    return match_input(x, np.where(u >= 0.0, upper, lower))


def agr_pdf(params: ArctanGRParams, x):
    """Density of the AGR distribution (the derivative of :func:`agr_cdf`)."""
    arr = as_float_array(x)
    u = (arr - params.omega) / params.psi
    e_up = np.exp(-np.maximum(u, 0.0))
    upper = 2.0 * e_up / (math.pi * params.psi * (1.0 + (1.0 - 0.5 * e_up) ** 2))
    t = np.exp(np.minimum(u, 0.0))
    lower = 8.0 * t / (math.pi * params.psi * (4.0 + t * t))
    return match_input(x, np.where(u >= 0.0, upper, lower))


def agr_logpdf(params: ArctanGRParams, x):
    """Log density, written to avoid under/overflow far from the location."""
    arr = as_float_array(x, require_finite=True)
    u = (arr - params.omega) / params.psi
    up = np.maximum(u, 0.0)
    un = np.minimum(u, 0.0)
    upper = math.log(2.0 / (math.pi * params.psi)) - up - np.log1p((1.0 - 0.5 * np.exp(-up)) ** 2)
    lower = math.log(8.0 / (math.pi * params.psi)) + un - np.log(4.0 + np.exp(2.0 * un))
    return match_input(x, np.where(u >= 0.0, upper, lower))


def agr_cum_hazard(params: ArctanGRParams, x):
    """Cumulative hazard ``-log(survival)``; nondecreasing, 0 at -inf."""
    arr = as_float_array(x)
    return match_input(x, -np.log(agr_survival(params, arr)))


def agr_hazard(params: ArctanGRParams, x):
    """Hazard rate ``pdf / survival``; finite for all finite x.

    Above the location both pdf and survival decay like ``e^{-u}``; the
    shared factor is cancelled analytically so the hazard stays finite
    (tending to ``1/psi``) even where both underflow to zero.
    """
    arr = as_float_array(x)
    u = (arr - params.omega) / params.psi
    z = 0.5 * np.exp(-np.maximum(u, 0.0))
    # z / arctan(z/(2-z)) -> 2 - z as z -> 0; switch before the ratio degrades
    small = z < 1e-8
    safe_z = np.where(small, 0.5, z)
    ratio = np.where(small, 2.0 - z, safe_z / np.arctan(safe_z / (2.0 - safe_z)))
    upper = ratio / (params.psi * (1.0 + (1.0 - z) ** 2))
    lower_pdf = 8.0 * np.exp(np.minimum(u, 0.0)) / (
        math.pi * params.psi * (4.0 + np.exp(2.0 * np.minimum(u, 0.0)))
    )
    lower_sf = 1.0 - FOUR_OVER_PI * np.arctan(0.5 * np.exp(np.minimum(u, 0.0)))
    return match_input(x, np.where(u >= 0.0, upper, lower_pdf / lower_sf))


def _agr_tail_quantile(params: ArctanGRParams, q):
    """Quantile expressed through the tail probability ``q = 1 - p``.

    Only valid on the upper branch (``q <= 1 - P_STAR``).  Algebraically
    identical to ``omega - psi*log(2*(1 - tan(pi*(1-q)/4)))`` but free of the
    ``1 - tan(...)`` cancellation, so it stays accurate as ``q -> 0``.
    """
    t = np.tan(_PI_OVER_4 * q)
    return params.omega - params.psi * np.log(4.0 * t / (1.0 + t))


def agr_quantile(params: ArctanGRParams, p):
    """Quantile function (inverse CDF) of the AGR distribution.

    Splits at ``P_STAR = G(omega)``: below it the result lies below the
    location, at or above it the upper-branch closed form applies.  Both
    branch formulas agree (value ``omega``) at the split.
    """
    arr = _checked_prob(p)
    lower = params.omega + params.psi * np.log(2.0 * np.tan(_PI_OVER_4 * arr))
    # 1 - p is exact for p >= 1/2, so the tail form loses nothing here
    upper = _agr_tail_quantile(params, 1.0 - arr)
    return match_input(p, np.where(arr < P_STAR, lower, upper))


def agr_sample(params: ArctanGRParams, n, seed):
    """Draw ``n`` i.i.d. values by inverse-transform sampling.

    Randomness comes from numpy's seeded PCG64 generator
    (``np.random.default_rng(seed)``), so identical seeds reproduce the
    identical sequence on any platform.  For parallel Monte Carlo, split
    streams with ``np.random.SeedSequence(seed).spawn(k)`` and hand each
    child to its own generator; see :func:`arctangr.risk.mc_oracle`.
    """
    if not (isinstance(n, (int, np.integer)) and n >= 1):
        raise DomainError(f"n must be a positive integer, got {n!r}")
    rng = np.random.default_rng(seed)
    # random() lands in [0, 1); nudge an exact 0 into the domain of the quantile
    p = np.maximum(rng.random(int(n)), np.finfo(float).tiny)
    return agr_quantile(params, p)


def agr_moment(params: ArctanGRParams, r):
    """r-th raw moment ``E[X^r]`` by adaptive quadrature.

    The integral is split at the location (the density's kink) and truncated
    where the integrand falls below 1e-16 of its peak; all moments exist
    because the tails decay exponentially.
    """
    if not (isinstance(r, (int, np.integer)) and r >= 1):
        raise DomainError(f"moment order r must be a positive integer, got {r!r}")
    omega, psi = params.omega, params.psi
    r = int(r)

    def integrand(x):
        return x**r * agr_pdf(params, x)

    scan = omega + psi * np.linspace(-60.0, 60.0, 241)
    peak = float(np.max(np.abs(integrand(scan))))
    if peak == 0.0:
        peak = abs(omega) ** r * 8.0 / (5.0 * math.pi * psi) + 1e-300
    cut = 40.0
    while max(abs(integrand(omega - cut * psi)), abs(integrand(omega + cut * psi))) > 1e-16 * peak:
        cut *= 2.0
        if cut > 1e6:  # exp(-1e6) underflowed long ago; cannot happen
            break

    total = 0.0
    for a, b in ((omega - cut * psi, omega), (omega, omega + cut * psi)):
        value, _ = adaptive_quad(
            integrand, a, b, epsabs=1e-14, epsrel=1e-9, label=f"moment r={r}"
        )
        total += value
    return total


def agr_skewness(params: ArctanGRParams) -> float:
    """Quartile-based (Bowley) skewness; free of both location and scale."""
    q1, q2, q3 = (agr_quantile(params, p) for p in (0.25, 0.5, 0.75))
    return (q1 + q3 - 2.0 * q2) / (q3 - q1)


def agr_kurtosis(params: ArctanGRParams) -> float:
    """Octile-based (Moors) kurtosis; free of both location and scale."""
    e1, e3, e5, e7 = (agr_quantile(params, p) for p in (0.125, 0.375, 0.625, 0.875))
    q1, q3 = agr_quantile(params, 0.25), agr_quantile(params, 0.75)
    return (e7 + e3 - e5 - e1) / (q3 - q1)
