"""Two-parameter Mittag-Leffler function E_{a,b}(z) for real arguments.

E_{a,b}(z) = sum_k z^k / Gamma(a*k + b), a, b > 0.  The evaluator targets an
*absolute* accuracy `tol` and switches regime by argument:

* plain float64 power series where cancellation is provably harmless,
* the algebraic large-argument expansion -sum_{k>=1} z^{-k}/Gamma(b - a*k)
  for far-negative z and a <= 1 (its truncation error is estimated from the
  smallest term; for a near 1 an exp(z) Stokes contribution is added),
* an extended-precision (mpmath) series for the cancellation-heavy midrange
  and for a > 1 at large |z|.

The boundaries between regimes are data driven (predicted round-off of the
float series, probed truncation error of the expansion) rather than fixed
cutoffs: fixed cutoffs under-deliver the default 1e-10 tolerance for
a ~ 0.5 already at z = -5.  Log-Gamma comes from ``math.lgamma``; a Lanczos
fallback is not needed on CPython.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

from .errors import AccuracyError, DomainError, SingularityError

#: Supported argument window, |z| <= Z_MAX_NEG for z < 0, z <= Z_MAX_POS else.
Z_MAX_NEG = 200.0
Z_MAX_POS = 30.0

DEFAULT_TOL = 1e-10

_SERIES_CAP = 10_000     # power-series term budget
_ASYMP_CAP = 150         # expansion term budget
_EPS = 2.220446049250313e-16
_LOG_TINY = -745.0       # below this, exp() underflows to 0.0


@dataclass(frozen=True)
class MLQuery:
    """Parameters of one E_{a,b}(z) evaluation with an accuracy target."""

    a: float
    b: float
    z: float
    tol: float = DEFAULT_TOL

    def __post_init__(self) -> None:
        if not (self.a > 0.0) or not (self.b > 0.0):
            raise DomainError(f"need a > 0 and b > 0, got a={self.a}, b={self.b}")
        if not (self.tol > 0.0):
            raise DomainError(f"need tol > 0, got {self.tol}")
        if not (-Z_MAX_NEG <= self.z <= Z_MAX_POS):
            raise DomainError(
                f"z={self.z} outside supported window [{-Z_MAX_NEG}, {Z_MAX_POS}]"
            )


def rgamma(x: float) -> float:
    """Reciprocal Gamma function 1/Gamma(x) for real x, 0 at the poles."""
    if x > 0.0:
        lg = math.lgamma(x)
        return math.exp(-lg) if lg < -_LOG_TINY else 0.0
    if x == math.floor(x):
        return 0.0
    log_abs, sign = _rgamma_log(x)
    return sign * math.exp(log_abs) if log_abs > _LOG_TINY else 0.0


def _rgamma_log(x: float) -> tuple[float, float]:
    # log|1/Gamma(x)| and its sign; (-inf, 0) at poles.
    if x > 0.0:
        return -math.lgamma(x), 1.0
    if x == math.floor(x):
        return -math.inf, 0.0
    s = math.sin(math.pi * x)
    return math.log(abs(s)) - math.log(math.pi) + math.lgamma(1.0 - x), math.copysign(1.0, s)


def _series_peak(a: float, b: float, az: float) -> tuple[float, float]:
    # Index and log-magnitude of the largest power-series term at |z| = az.
    # Terms grow while |z| > (a*k+b)^a roughly, i.e. up to a*k+b ~ |z|^(1/a).
    if az <= 0.0:
        return 0.0, -math.inf
    x = az ** (1.0 / a)
    kstar = (x - b) / a
    if kstar <= 0.0:
        return 0.0, math.log(az) - math.lgamma(a + b)  # first term already largest
    return kstar, kstar * math.log(az) - math.lgamma(a * kstar + b)


def _series_float(a: float, b: float, z: float, tol: float) -> float:
    # Direct summation; every term via logs so intermediate overflow cannot occur.
    az = abs(z)
    logaz = math.log(az)
    kstar, _ = _series_peak(a, b, az)
    total = rgamma(b)
    for k in range(1, _SERIES_CAP):
        logt = k * logaz - math.lgamma(a * k + b)
        if logt > 705.0:
            raise AccuracyError(
                f"E_({a},{b})({z}) overflows float64 during summation"
            )
        t = math.exp(logt) if logt > _LOG_TINY else 0.0
        if z < 0.0 and (k & 1):
            t = -t
        total += t
        if abs(t) < tol / 10.0 and k > kstar:
            return total
    raise AccuracyError(f"series for E_({a},{b})({z}) needs more than {_SERIES_CAP} terms")


def _asymptotic(a: float, b: float, z: float) -> tuple[float, float]:
    # -sum_{k>=1} z^{-k}/Gamma(b-a*k), truncated just before its smallest term.
    # Returns (value, error estimate).  Valid on the negative axis for a <= 1.
    logaz = math.log(abs(z))
    terms = []
    for k in range(1, _ASYMP_CAP + 1):
        log_rg, sign = _rgamma_log(b - a * k)
        logt = -k * logaz + log_rg
        mag = math.exp(logt) if logt > _LOG_TINY else 0.0
        t = sign * mag
        if z < 0.0 and (k & 1):
            t = -t
        terms.append(t)
    mags = [abs(t) for t in terms]
    # Truncate before the globally smallest term in the window; the first
    # omitted term estimates the truncation error.
    kmin = min(range(len(mags)), key=mags.__getitem__)
    value = -math.fsum(terms[:kmin])
    err = mags[kmin]
    if a >= 0.9:
        err += math.exp(z)  # Stokes-line exponential, exact at a = 1
    return value, err


def _series_mp(a: float, b: float, z: float, tol: float) -> float:
    kstar, logpeak = _series_peak(a, b, abs(z))
    if 3.0 * kstar + 50.0 > _SERIES_CAP:
        raise AccuracyError(
            f"E_({a},{b})({z}): extended-precision series infeasible "
            f"(peak term index ~{kstar:.0f})"
        )
    digits = max(0.0, logpeak / math.log(10.0)) + max(0.0, -math.log10(tol))
    dps = int(digits) + 15
    with mpmath.workdps(dps):
        zm = mpmath.mpf(z)
        am = mpmath.mpf(a)
        bm = mpmath.mpf(b)
        total = mpmath.rgamma(bm)
        zpow = mpmath.mpf(1)
        for k in range(1, _SERIES_CAP):
            zpow *= zm
            t = zpow * mpmath.rgamma(am * k + bm)
            total += t
            if abs(t) < tol / 10.0 and k > kstar:
                return float(total)
    raise AccuracyError(f"series for E_({a},{b})({z}) needs more than {_SERIES_CAP} terms")


def ml_eval(q: MLQuery) -> float:
    """Evaluate E_{a,b}(z) with absolute error <= q.tol."""
    a, b, z, tol = q.a, q.b, q.z, q.tol
    if z == 0.0:
        return rgamma(b)
    if z > 0.0:
        return _series_float(a, b, z, tol)
    # z < 0: the series alternates; accept float64 only if the predicted
    # round-off (peak term * eps * term count) stays well under tol.
    kstar, logpeak = _series_peak(a, b, abs(z))
    nterms = 3.0 * kstar + 50.0
    roundoff = math.exp(min(700.0, logpeak)) * _EPS * nterms
    if roundoff < tol / 4.0 and nterms < _SERIES_CAP:
        return _series_float(a, b, z, tol)
    if a <= 1.0:
        value, err = _asymptotic(a, b, z)
        if err <= tol / 4.0:
            return value
    return _series_mp(a, b, z, tol)


def ml(a: float, b: float, z: float, tol: float = DEFAULT_TOL) -> float:
    """Shorthand for ``ml_eval(MLQuery(a, b, z, tol))``."""
    return ml_eval(MLQuery(a, b, z, tol))


def ml_kernel(t: float, lam: float, a: float, b: float, tol: float = DEFAULT_TOL) -> float:
    """Kernel t^(b-1) * E_{a,b}(lam * t^a); singular at t = 0 when b < 1."""
    if t < 0.0:
        raise DomainError(f"need t >= 0, got {t}")
    if t == 0.0:
        if b < 1.0:
            raise SingularityError(f"kernel singular at t=0 for b={b} < 1")
        return rgamma(b) if b == 1.0 else 0.0
    return t ** (b - 1.0) * ml(a, b, lam * t**a, tol)


def ml_kernel_primitive(t: float, lam: float, a: float, b: float,
                        tol: float = DEFAULT_TOL) -> float:
    """Integral of the kernel from 0 to t: t^b * E_{a,b+1}(lam * t^a)."""
    if t < 0.0:
        raise DomainError(f"need t >= 0, got {t}")
    if t == 0.0:
        return 0.0
    return t**b * ml(a, b + 1.0, lam * t**a, tol)


def ml_bound_constant(a: float, b: float, grid, tol: float = DEFAULT_TOL) -> float:
    """Empirical max of |E_{a,b}(z)| * (1 + |z|) over a grid of z <= 0.

    Lower estimate of the decay-bound constant C_{a,b}; the returned value
    dominates |E_{a,b}(z)| * (1 + |z|) at every grid point by construction.
    """
    if not (0.0 < a < 2.0):
        raise DomainError(f"decay bound needs a in (0,2), got {a}")
    zs = list(grid)
    if not zs:
        raise DomainError("grid must be nonempty")
    best = 0.0
    for z in zs:
        if z > 0.0:
            raise DomainError(f"grid entries must be <= 0, got {z}")
        best = max(best, abs(ml(a, b, z, tol)) * (1.0 + abs(z)))
    return best
