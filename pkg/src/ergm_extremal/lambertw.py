"""Both real branches of the Lambert W function.

``lambert_w`` evaluates W_0 (principal) and W_{-1} by Halley iteration
with range-dependent starting guesses: a series about the branch point
-1/e, two-term Taylor / log-log asymptotics elsewhere, following the
classic treatment of Corless, Gonnet, Hare, Jeffrey & Knuth, "On the
Lambert W function", Adv. Comput. Math. 5 (1996).

``w_minus1_negexp`` / ``w0_negexp`` evaluate W(-exp(-u-1)) parametrized
directly by u >= 0.  Next to the branch point, forming the argument
-exp(-u-1) in floating point destroys the information that the iteration
needs (and the argument underflows outright past u ~ 744), while the
substituted equation s - log1p(+-s) = u stays perfectly conditioned.
The start value for W_{-1} uses the midpoint of the envelope bounds of
Chatzigeorgiou, IEEE Comm. Letters 17 (2013).
"""

import math
from enum import Enum

__all__ = ["Branch", "lambert_w", "w_minus1_negexp", "w0_negexp"]

_INV_E = math.exp(-1.0)
_BRANCH_SNAP = 1e-12  # |x + 1/e| below this: value is analytically forced to -1
_STEP_TOL = 1e-15
_MAX_ITER = 100


class Branch(Enum):
    """Branch selector: PRINCIPAL is W_0 on [-1/e, oo), MINUS_ONE is W_{-1} on [-1/e, 0)."""

    PRINCIPAL = 0
    MINUS_ONE = -1


def _halley(x, w):
    """Polish a starting guess w for w*e^w = x; step tolerance per iteration."""
    prev = prev2 = math.nan
    for _ in range(_MAX_ITER):
        ew = math.exp(w)
        f = w * ew - x
        w1 = w + 1.0
        if w1 == 0.0:
            # can only happen from a rounded start next to the branch point
            w = -1.0 + math.copysign(1e-7, f)
            continue
        dw = f / (ew * w1 - (w + 2.0) * f / (2.0 * w1))
        w -= dw
        if abs(dw) < _STEP_TOL * max(1.0, abs(w)):
            return w
        if w == prev or w == prev2:
            return w  # ulp-level limit cycle: the residual is at the noise floor
        prev, prev2 = w, prev
    raise ArithmeticError(f"no convergence for lambert_w at x={x!r}")


def _principal_start(x):
    if x > math.e:
        lx = math.log(x)
        return lx - math.log(lx)
    if x >= -0.25:
        # two-term Taylor about 0; adequate once Halley takes over
        return x * (1.0 - x) if x < 1.0 else math.log1p(x)
    p = math.sqrt(2.0 * (math.e * x + 1.0))
    return -1.0 + p - p * p / 3.0 + 11.0 * p ** 3 / 72.0


def _minus_one_start(x):
    if x > -0.1:
        lx = math.log(-x)
        return lx - math.log(-lx)
    u = max(-math.log(-x) - 1.0, 0.0)
    return -1.0 - math.sqrt(2.0 * u) - 5.0 * u / 6.0


def lambert_w(branch, x):
    """Real Lambert W: the solution w of w*e^w = x on the requested branch.

    Raises ValueError off the branch domain ([-1/e, oo) for PRINCIPAL,
    [-1/e, 0) for MINUS_ONE).  Within 1e-12 of the branch point -1/e the
    value -1 is returned exactly; the iteration is ill-conditioned there.
    """
    if x < -_INV_E - _BRANCH_SNAP:
        raise ValueError(f"lambert_w argument {x!r} below branch point -1/e")
    if abs(x + _INV_E) <= _BRANCH_SNAP:
        return -1.0
    if branch is Branch.PRINCIPAL:
        return _halley(x, _principal_start(x))
    if branch is Branch.MINUS_ONE:
        if x >= 0.0:
            raise ValueError(f"lambert_w branch -1 needs x < 0, got {x!r}")
        return _halley(x, _minus_one_start(x))
    raise ValueError(f"unknown branch {branch!r}")


def w_minus1_negexp(u):
    """W_{-1}(-exp(-u-1)) for u >= 0, accurate arbitrarily close to u = 0.

    Solves s - log1p(s) = u for s = -1 - W by Newton; the envelope bounds
    place s between sqrt(2u) + 2u/3 and sqrt(2u) + u.
    """
    if u < 0.0:
        raise ValueError(f"u must be nonnegative, got {u!r}")
    if u == 0.0:
        return -1.0
    s = math.sqrt(2.0 * u) + 5.0 * u / 6.0
    for _ in range(_MAX_ITER):
        step = (s - math.log1p(s) - u) * (1.0 + s) / s
        s -= step
        if s <= 0.0:
            s = 1e-300
        if abs(step) <= 1e-16 * (1.0 + abs(s)):
            break
    return -1.0 - s


def w0_negexp(u):
    """W_0(-exp(-u-1)) for u >= 0: solves -s - log1p(-s) = u for s = 1 + W."""
    if u < 0.0:
        raise ValueError(f"u must be nonnegative, got {u!r}")
    if u == 0.0:
        return -1.0
    if u > 20.0:
        # 1 + W is no longer separable from 1 in floats; the value itself is
        # a tiny negative number where the two-term series is exact to ulps
        x = -math.exp(-u - 1.0)
        return x * (1.0 - x)
    s = 1.0 - math.exp(-u - 1.0) if u > 1.0 else min(math.sqrt(2.0 * u), 0.9)
    for _ in range(_MAX_ITER):
        step = (-s - math.log1p(-s) - u) * (1.0 - s) / s
        s_new = s - step
        if s_new >= 1.0:
            s_new = (s + 1.0) / 2.0
        elif s_new <= 0.0:
            s_new = s / 2.0
        converged = abs(step) <= 1e-16 * (1.0 + abs(s))
        s = s_new
        if converged:
            break
    return s - 1.0
