"""Critical slopes and gamma thresholds of the lower-boundary optimizer.

The secant slopes of the powered lower boundary across its segments
drive the whole phase classification: their monotonicity pattern, the
gamma at which the second slope meets the limit slope 3*gamma, the
Lambert-W families of thresholds past which minima leave the Turán
points, and the tie levels at which distant Turán points exchange roles.

All closed forms here are evaluated through the u-parametrized Lambert
helpers with log1p/expm1 arithmetic.  That is algebraically identical to
the textbook W expressions but keeps full precision as n grows, where
the W argument approaches the branch point -1/e.
"""

import math
from dataclasses import dataclass
from enum import Enum

from .curves import goodman_derivative, turan_triangle_density
from .lambertw import Branch, lambert_w, w0_negexp, w_minus1_negexp

__all__ = [
    "SLOPE_DECREASING_MAX",
    "SLOPE_INCREASING_MIN",
    "SlopePattern",
    "AmbiguousPatternError",
    "slope",
    "slope_monotonicity",
    "CriticalDirection",
    "critical_direction",
    "gamma_star",
    "LambertAux",
    "lambert_aux",
    "gamma_n",
    "gamma_tilde_n",
    "gamma_n_star",
    "tie_level",
    "goodman_inflection",
    "goodman_min_slope",
]

# Slope-sequence regime boundaries: strictly decreasing up to 5/9,
# decreasing-then-increasing up to log_{27/16}(3/2), increasing beyond.
SLOPE_DECREASING_MAX = 5.0 / 9.0
SLOPE_INCREASING_MIN = math.log(1.5) / math.log(27.0 / 16.0)


class SlopePattern(Enum):
    DECREASING = "decreasing"
    DEC_THEN_INC = "dec_then_inc"
    INCREASING = "increasing"


class AmbiguousPatternError(RuntimeError):
    """More than one direction change in the slope sequence."""


def slope(k, gamma):
    """Secant slope k(k+1)(t_k^gamma - t_{k-1}^gamma) across segment k."""
    if k < 1:
        raise ValueError(f"segment index must be >= 1, got {k}")
    if gamma <= 0.0:
        raise ValueError(f"gamma must be positive, got {gamma!r}")
    tk = turan_triangle_density(k)
    tk_prev = turan_triangle_density(k - 1)
    return k * (k + 1.0) * (tk ** gamma - tk_prev ** gamma)


def slope_monotonicity(gamma, k_max):
    """Empirical monotonicity pattern of the slopes s_2..s_{k_max}."""
    if k_max < 3:
        raise ValueError(f"k_max must be >= 3, got {k_max}")
    values = [slope(k, gamma) for k in range(2, k_max + 1)]
    diffs = [b - a for a, b in zip(values, values[1:])]
    if all(d > 0.0 for d in diffs):
        return SlopePattern.INCREASING
    if all(d <= 0.0 for d in diffs):
        return SlopePattern.DECREASING
    first_up = next(i for i, d in enumerate(diffs) if d > 0.0)
    if all(d <= 0.0 for d in diffs[:first_up]) and all(d > 0.0 for d in diffs[first_up:]):
        return SlopePattern.DEC_THEN_INC
    raise AmbiguousPatternError(
        f"slope sequence for gamma={gamma} changes direction more than once"
    )


@dataclass(frozen=True)
class CriticalDirection:
    """Parameter-space direction along which consecutive landmark points tie:
    (0, -1) at index 0 and (1, -1/s_k) for k >= 1."""

    k: int
    vector: tuple


def critical_direction(k, gamma):
    if k < 0:
        raise ValueError(f"index must be >= 0, got {k}")
    if k == 0:
        return CriticalDirection(0, (0.0, -1.0))
    s_k = slope(k, gamma)
    second = -1.0 / s_k if s_k > 0.0 else -math.inf  # s_1 = 0 degenerates
    return CriticalDirection(k, (1.0, second))


def gamma_star():
    """The gamma where the second slope equals the limit slope 3*gamma.

    Closed form W_0(2 ln(9/2)) / ln(9/2), about 0.699; separates the two
    shapes the slope dip can take in the middle regime.
    """
    ln92 = math.log(4.5)
    return lambert_w(Branch.PRINCIPAL, 2.0 * ln92) / ln92


@dataclass(frozen=True)
class LambertAux:
    """Ingredients of the interior-threshold equation 1 + a*g = p^g at index n.

    q = -ln(p)/a lies in (-1, 0), decreases in n and tends to -1;
    u = -q - ln(-q) - 1 > 0 re-expresses q e^q as -exp(-u-1).  ln_p is
    log(p) computed to full relative precision.
    """

    n: int
    a: float
    p: float
    q: float
    u: float
    ln_p: float


def _accurate_ln_p(n):
    # p(n) = n^3 / ((n+1)^2 (n-2)) = 1 / (1 - (3n+2)/n^3)
    return -math.log1p(-(3.0 * n + 2.0) / n ** 3)


def lambert_aux(n):
    if n < 3:
        raise ValueError(f"threshold auxiliaries need n >= 3, got {n}")
    a = 3.0 / ((n + 1.0) * (n - 2.0))
    p = n ** 3 / ((n + 1.0) ** 2 * (n - 2.0))
    ln_p = _accurate_ln_p(n)
    q = -ln_p / a
    delta = (a - ln_p) / a  # = q + 1 > 0
    u = -delta - math.log1p(-delta)  # = -q - log(-q) - 1
    return LambertAux(n, a, p, q, u, ln_p)


def gamma_n(n):
    """Positive solution of 1 + a(n)*g = p(n)^g: the threshold past which
    the minimizer leaves the Turán point when the slope tie a = -s_n holds.

    Grows like 2n/9.
    """
    aux = lambert_aux(n)
    w = w_minus1_negexp(aux.u)  # = W_{-1}(q e^q)
    return -(w / aux.ln_p + 1.0 / aux.a)


def gamma_tilde_n(n):
    """Threshold past which the left derivative at the n-th Turán point can
    vanish: solves s_n(g) = 3g((n-1)/(n+1)) t_n^(g-1).

    For n = 2 the equation degenerates (t_1 = 0) to 1 - 3g/4 = 0, so the
    value is exactly 4/3.  Conjecturally grows like 4n/9.
    """
    if n < 2:
        raise ValueError(f"left-derivative threshold needs n >= 2, got {n}")
    if n == 2:
        return 4.0 / 3.0
    ln_p = _accurate_ln_p(n)
    # reciprocal ratio: 1 + ã*g = p̃^g with p̃ = 1/p, ã = -3/n²
    delta = (n * n * ln_p - 3.0) / 3.0  # = -(q̃ + 1) > 0
    u = delta - math.log1p(delta)
    w = w0_negexp(u)  # = W_0(q̃ e^q̃)
    return w / ln_p + n * n / 3.0


def gamma_n_star(n):
    """Gamma at which the 2-vs-n tie level meets the slope s_n.

    Closed form ln(n(n-1)/((n+1)(n-2))) / ln(n^3/((n-2)(n+1)^2)); tends
    to 2/3 from above.
    """
    if n < 3:
        raise ValueError(f"tie threshold needs n >= 3, got {n}")
    return math.log1p(2.0 / ((n + 1.0) * (n - 2.0))) / _accurate_ln_p(n)


def tie_level(n, gamma):
    """The -a level 2(n+1) t_n^gamma / (n-1) at which the objective values
    of the 2-class and the (n+1)-class Turán points coincide.

    n = 1 is degenerate (t_1 = 0) and returns 0.
    """
    if n < 1:
        raise ValueError(f"tie level needs n >= 1, got {n}")
    if n == 1:
        return 0.0
    return 2.0 * (n + 1.0) / (n - 1.0) * turan_triangle_density(n) ** gamma


def goodman_inflection(gamma):
    """Location (1 + 1/sqrt(2g-1))/4 where the powered Goodman curve's
    slope is minimal; inside (1/2, 1) exactly when gamma > 5/9."""
    if gamma <= 0.5:
        raise ValueError(f"inflection needs gamma > 1/2, got {gamma!r}")
    return 0.25 * (1.0 + 1.0 / math.sqrt(2.0 * gamma - 1.0))


def goodman_min_slope(gamma):
    """Minimum slope of the powered Goodman curve over (1/2, 1).

    Finite only for gamma > 5/9 (otherwise the minimum sits at e = 1 and
    equals the limit slope 3*gamma).
    """
    x2 = goodman_inflection(gamma)
    if x2 >= 1.0:
        raise ValueError(f"slope minimum is at the endpoint for gamma={gamma!r}")
    return goodman_derivative(x2, gamma)
