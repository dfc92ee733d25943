"""Distribution helpers used by the probabilistic measures.

Everything here is implemented locally on top of ``math``: the Poisson
survival function goes through the regularized incomplete gamma function,
the normal CDF through ``erfc``, the normal quantile through a rational
initial guess refined by Newton steps, and the hypergeometric CDF through
exact integer summation of binomial coefficients.
"""

from __future__ import annotations

import math

_MAX_GAMMA_ITER = 10_000
_GAMMA_EPS = 1e-16


def _lower_gamma_series(a: float, x: float) -> float:
    """Regularized lower incomplete gamma P(a, x) by series, for x < a + 1."""
    ap = a
    total = 1.0 / a
    delta = total
    for _ in range(_MAX_GAMMA_ITER):
        ap += 1.0
        delta *= x / ap
        total += delta
        if abs(delta) < abs(total) * _GAMMA_EPS:
            break
    return total * math.exp(-x + a * math.log(x) - math.lgamma(a))


def _upper_gamma_cf(a: float, x: float) -> float:
    """Regularized upper incomplete gamma Q(a, x) by continued fraction,
    for x >= a + 1 (modified Lentz algorithm)."""
    tiny = 1e-300
    b = x + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_GAMMA_ITER):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _GAMMA_EPS:
            break
    return h * math.exp(-x + a * math.log(x) - math.lgamma(a))


def regularized_lower_gamma(a: float, x: float) -> float:
    """P(a, x) = gamma(a, x) / Gamma(a) for a > 0, x >= 0."""
    if a <= 0.0:
        raise ValueError("shape parameter must be positive")
    if x < 0.0:
        raise ValueError("x must be non-negative")
    if x == 0.0:
        return 0.0
    if x < a + 1.0:
        return min(1.0, _lower_gamma_series(a, x))
    return max(0.0, 1.0 - _upper_gamma_cf(a, x))


def poisson_sf(lam: float, k: int) -> float:
    """P[Poisson(lam) >= k] for lam >= 0 and integer k >= 0.

    Uses the identity P[N >= k] = P(k, lam) with the regularized lower
    incomplete gamma function.
    """
    if lam < 0.0:
        raise ValueError("lam must be non-negative")
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return 1.0
    if lam == 0.0:
        return 0.0
    return regularized_lower_gamma(float(k), lam)


def poisson_cdf(lam: float, k: int) -> float:
    """P[Poisson(lam) <= k] for integer k >= -1 (empty sum allowed)."""
    if k < 0:
        return 0.0
    return 1.0 - poisson_sf(lam, k + 1)


_SQRT2 = math.sqrt(2.0)


def std_normal_cdf(z: float) -> float:
    """Phi(z) via the complementary error function."""
    return 0.5 * math.erfc(-z / _SQRT2)


def std_normal_sf(z: float) -> float:
    """1 - Phi(z), computed without cancellation."""
    return 0.5 * math.erfc(z / _SQRT2)


def _std_normal_pdf(z: float) -> float:
    return math.exp(-0.5 * z * z) / math.sqrt(2.0 * math.pi)


# Coefficients of Acklam's rational approximation to the normal quantile.
_A = (-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
      1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00)
_B = (-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
      6.680131188771972e+01, -1.328068155288572e+01)
_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
      -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00)
_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
      3.754408661907416e+00)


def std_normal_quantile(p: float) -> float:
    """Inverse of ``std_normal_cdf`` for p in (0, 1)."""
    if not 0.0 < p < 1.0:
        raise ValueError("p must lie strictly between 0 and 1")
    p_low, p_high = 0.02425, 1.0 - 0.02425
    if p < p_low:
        q = math.sqrt(-2.0 * math.log(p))
        z = ((((((_C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5])
             / ((((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1.0))
    elif p <= p_high:
        q = p - 0.5
        r = q * q
        z = ((((((_A[0] * r + _A[1]) * r + _A[2]) * r + _A[3]) * r + _A[4]) * r + _A[5]) * q
             / (((((_B[0] * r + _B[1]) * r + _B[2]) * r + _B[3]) * r + _B[4]) * r + 1.0))
    else:
        q = math.sqrt(-2.0 * math.log(1.0 - p))
        z = -((((((_C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5])
              / ((((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1.0))
    # Two Newton refinements push the error to machine precision.
    for _ in range(2):
        err = std_normal_cdf(z) - p
        pdf = _std_normal_pdf(z)
        if pdf == 0.0:
            break
        z -= err / pdf
    return z


def hypergeom_cdf(population: int, successes: int, draws: int, k: int) -> float:
    """P[H <= k] for a hypergeometric draw, by exact integer summation.

    ``H`` counts successes in ``draws`` draws without replacement from a
    population of ``population`` items of which ``successes`` are marked.
    """
    if population < 0 or not 0 <= successes <= population or not 0 <= draws <= population:
        raise ValueError("invalid hypergeometric parameters")
    lo = max(0, draws - (population - successes))
    hi = min(draws, successes)
    if k < lo:
        return 0.0
    if k >= hi:
        return 1.0
    numerator = sum(
        math.comb(successes, i) * math.comb(population - successes, draws - i)
        for i in range(lo, k + 1)
    )
    return numerator / math.comb(population, draws)
