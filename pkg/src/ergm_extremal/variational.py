"""Reduced variational problem over edge density.

For the negative divergence direction the objective is a*e plus the
powered triangle-density floor; for the positive direction a*e plus the
Kruskal-Katona ceiling e^(s*gamma/2).  Besides the closed-form pieces
(one-sided derivatives at the Turán points, the nested-radical root of
the in-segment stationarity equation) there is a brute-force grid
optimizer that serves as the independent oracle for every classification
result.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from .curves import (
    lower_boundary,
    lower_boundary_grid,
    segment_of,
    turan_edge_density,
    turan_triangle_density,
)

__all__ = [
    "BetaDirection",
    "Objective",
    "MinimizerKind",
    "Minimizer",
    "NoInteriorRootError",
    "objective_value",
    "right_derivative",
    "left_derivative",
    "nested_radical_iterates",
    "interior_root",
    "grid_minimize",
    "positive_limit_argmax",
]

_GRID_STEP = 1e-4
_GRID_KNOTS = 2000          # Turán points injected as explicit candidates
_REFINE_TOL = 1e-10
_TIE_VALUE_TOL = 1e-9
_LOCATION_TOL = 1e-7
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


class BetaDirection(Enum):
    NEGATIVE = "neg"
    POSITIVE = "pos"


@dataclass(frozen=True)
class Objective:
    """Line slope a, exponent gamma, clique size s, and divergence direction."""

    a: float
    gamma: float
    s: int = 3
    direction: BetaDirection = BetaDirection.NEGATIVE

    def __post_init__(self):
        if self.gamma <= 0.0:
            raise ValueError(f"gamma must be positive, got {self.gamma!r}")
        if self.s < 3:
            raise ValueError(f"clique size must be >= 3, got {self.s}")
        if self.direction is BetaDirection.NEGATIVE and self.s != 3:
            raise ValueError("negative direction supports the triangle model only")


class MinimizerKind(Enum):
    ZERO = "zero"
    ONE = "one"
    LEFT_END = "left_end"
    RIGHT_END = "right_end"
    INTERIOR = "interior"


@dataclass(frozen=True)
class Minimizer:
    """Optimizer location with its containing segment and tie chain."""

    e_star: float
    segment: Optional[int]
    kind: MinimizerKind
    objective_value: float
    tied_with: Optional["Minimizer"] = None

    def locations(self):
        """All tied optimizer locations, ascending."""
        out, node = [], self
        while node is not None:
            out.append(node.e_star)
            node = node.tied_with
        return out


class NoInteriorRootError(ValueError):
    """The stationarity equation has no root inside the requested segment."""


def objective_value(obj, e):
    """a*e + powered floor (negative direction) or a*e + e^(s*gamma/2)."""
    if not 0.0 <= e <= 1.0:
        raise ValueError(f"edge density {e!r} outside [0, 1]")
    if obj.direction is BetaDirection.NEGATIVE:
        return obj.a * e + lower_boundary(e, obj.gamma)
    return obj.a * e + e ** (obj.s * obj.gamma / 2.0)


def _objective_grid(obj, e):
    if obj.direction is BetaDirection.NEGATIVE:
        return obj.a * e + lower_boundary_grid(e, obj.gamma)
    return obj.a * e + e ** (obj.s * obj.gamma / 2.0)


def _pow_zero(base, expo):
    # limit conventions for t_k^(gamma-1) at t_1 = 0
    if base == 0.0:
        if expo > 0.0:
            return 0.0
        if expo == 0.0:
            return 1.0
        return math.inf
    return base ** expo


def right_derivative(a, gamma, k):
    """Right derivative a + (3 k gamma/(k+1)) t_k^(gamma-1) at the k-th Turán point."""
    if k < 1:
        raise ValueError(f"index must be >= 1, got {k}")
    tk = _pow_zero(turan_triangle_density(k), gamma - 1.0)
    return a + 3.0 * k * gamma / (k + 1.0) * tk


def left_derivative(a, gamma, k):
    """Left derivative a + (3(k-1) gamma/(k+1)) t_k^(gamma-1); needs k >= 2."""
    if k < 2:
        raise ValueError(f"left derivative needs k >= 2, got {k}")
    tk = _pow_zero(turan_triangle_density(k), gamma - 1.0)
    return a + 3.0 * (k - 1.0) * gamma / (k + 1.0) * tk


def _ln_radical_constant(k, a, gamma):
    # log of c = -a k(k+1)/(3 gamma (k-1)) * (k^2(k+1)^2/(k-1))^(gamma-1);
    # c itself overflows for large gamma, so everything stays in logs
    return (
        math.log(-a)
        + math.log(k * (k + 1.0) / (3.0 * gamma * (k - 1.0)))
        + (gamma - 1.0) * math.log(k * k * (k + 1.0) ** 2 / (k - 1.0))
    )


def _ln_profile(x, k, gamma):
    # log of x^(2 gamma - 1) (3k - 2x)^(gamma - 1), the substituted stationarity profile
    return (2.0 * gamma - 1.0) * math.log(x) + (gamma - 1.0) * math.log(3.0 * k - 2.0 * x)


def nested_radical_iterates(k, a, gamma, tol=1e-13, max_iter=10 ** 5):
    """Iterates of x -> 3k/2 - (c^(1/m)/2) x^(1/(mn)) from x_1 = k+1.

    m = gamma - 1, n = 1/(1 - 2 gamma); the sequence decreases to the
    stationarity root in (k, k+1) whenever one exists.  The list of
    iterates is returned so callers can inspect convergence.
    """
    if k < 2:
        raise ValueError(f"segment index must be >= 2, got {k}")
    if gamma <= 1.0:
        raise ValueError(f"nested radical needs gamma > 1, got {gamma!r}")
    if a >= 0.0:
        raise ValueError(f"line slope must be negative, got {a!r}")
    m = gamma - 1.0
    inv_mn = (1.0 - 2.0 * gamma) / m
    half_root = 0.5 * math.exp(_ln_radical_constant(k, a, gamma) / m)
    xs = [k + 1.0]
    for _ in range(max_iter):
        x = xs[-1]
        if not k < x <= k + 1.0:
            break
        x_next = 1.5 * k - half_root * x ** inv_mn
        xs.append(x_next)
        if abs(x_next - x) < tol:
            break
    return xs


def _bisect_profile(k, gamma, ln_c, lo, hi):
    # profile is decreasing on [lo, hi]; root of ln_profile = ln_c
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if _ln_profile(mid, k, gamma) > ln_c:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-15:
            break
    return 0.5 * (lo + hi)


def interior_root(k, a, gamma):
    """Edge density in (e_{k-1}, i_k) where the objective derivative vanishes.

    Runs the nested-radical iteration and falls back to bisection of the
    substituted profile when the iteration stalls (its contraction rate
    degrades as gamma decreases to 1).  Raises NoInteriorRootError when
    the profile never meets the constant on (k, k+1).
    """
    if k < 2:
        raise ValueError(f"segment index must be >= 2, got {k}")
    if gamma <= 1.0:
        raise ValueError(f"interior roots need gamma > 1, got {gamma!r}")
    if a >= 0.0:
        raise ValueError(f"line slope must be negative, got {a!r}")
    ln_c = _ln_radical_constant(k, a, gamma)
    x_peak = 3.0 * k * (2.0 * gamma - 1.0) / (2.0 * (3.0 * gamma - 2.0))
    if ln_c > _ln_profile(x_peak, k, gamma):
        raise NoInteriorRootError(
            f"no stationary point on segment {k} for a={a!r}, gamma={gamma!r}"
        )
    if k > 2 and ln_c <= _ln_profile(k + 1.0, k, gamma):
        raise NoInteriorRootError(
            f"stationary point sits at or beyond the left segment end for a={a!r}"
        )
    xs = nested_radical_iterates(k, a, gamma)
    x = xs[-1]
    if not (len(xs) > 1 and abs(xs[-1] - xs[-2]) < 1e-12 and x_peak <= x < k + 1.0):
        x = _bisect_profile(k, gamma, ln_c, x_peak, k + 1.0 - 1e-15)
    return (k * k - (x - k) ** 2) / (k * (k + 1.0))


def _golden(f, lo, hi, tol=_REFINE_TOL):
    h = hi - lo
    c, d = hi - _INV_PHI * h, lo + _INV_PHI * h
    fc, fd = f(c), f(d)
    while hi - lo > tol:
        if fc < fd:
            hi, d, fd = d, c, fc
            c = hi - _INV_PHI * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + _INV_PHI * (hi - lo)
            fd = f(d)
    mid = 0.5 * (lo + hi)
    return mid, f(mid)


def _describe(e, value, obj):
    if e <= 1e-9:
        return Minimizer(e, None, MinimizerKind.ZERO, value)
    if e >= 1.0 - 1e-9:
        return Minimizer(e, None, MinimizerKind.ONE, value)
    if obj.direction is BetaDirection.POSITIVE:
        return Minimizer(e, None, MinimizerKind.INTERIOR, value)
    k_near = max(1, round(e / (1.0 - e)))
    if abs(e - turan_edge_density(k_near)) < 1e-9:
        return Minimizer(e, k_near, MinimizerKind.RIGHT_END, value)
    return Minimizer(e, segment_of(e), MinimizerKind.INTERIOR, value)


def grid_minimize(obj):
    """Global optimizer of the objective over [0, 1].

    Coarse scan at step 1e-4 with every Turán point as an explicit
    candidate, then golden-section refinement of each locally optimal
    bracket; local optima within 1e-9 of the best are reported as ties.
    The negative direction minimizes, the positive one maximizes.
    """
    base = np.arange(0.0, 1.0 + _GRID_STEP / 2.0, _GRID_STEP)
    knots = np.array([k / (k + 1.0) for k in range(1, _GRID_KNOTS + 1)])
    es = np.unique(np.concatenate([base, knots, [1.0]]))
    sign = 1.0 if obj.direction is BetaDirection.NEGATIVE else -1.0
    vals = sign * _objective_grid(obj, es)
    f = lambda e: sign * objective_value(obj, e)

    last = len(es) - 1
    candidates = []
    for i in range(len(es)):
        if (i == 0 or vals[i] <= vals[i - 1]) and (i == last or vals[i] <= vals[i + 1]):
            lo = es[i - 1] if i > 0 else es[0]
            hi = es[i + 1] if i < last else es[last]
            if hi - lo > _REFINE_TOL:
                e_loc, v_loc = _golden(f, lo, hi)
            else:
                e_loc, v_loc = es[i], vals[i]
            if vals[i] <= v_loc:  # a kink candidate can beat the refined point
                e_loc, v_loc = es[i], vals[i]
            candidates.append((float(v_loc), float(e_loc)))

    candidates.sort()
    kept = []
    for v, e in candidates:
        if all(abs(e - e0) > _LOCATION_TOL for _, e0 in kept):
            kept.append((v, e))
    best = kept[0][0]
    tied = sorted(e for v, e in kept if v - best <= _TIE_VALUE_TOL)

    result = None
    for e in reversed(tied):
        m = _describe(e, sign * f(e), obj)
        result = Minimizer(m.e_star, m.segment, m.kind, m.objective_value, result)
    return result


def positive_limit_argmax(s, gamma, a):
    """Closed-form maximizer of a*e + e^(s*gamma/2) over [0, 1].

    Convex exponent (gamma >= 2/s): endpoint comparison, tie at a = -1.
    Concave exponent: complete for a >= -s*gamma/2, otherwise the interior
    stationary density (-2a/(s*gamma))^(2/(s*gamma-2)).
    """
    if s < 3:
        raise ValueError(f"clique size must be >= 3, got {s}")
    if gamma <= 0.0:
        raise ValueError(f"gamma must be positive, got {gamma!r}")
    expo = s * gamma / 2.0
    g = lambda e: a * e + e ** expo
    if gamma >= 2.0 / s:
        if abs(a + 1.0) <= 1e-12:
            one = Minimizer(1.0, None, MinimizerKind.ONE, g(1.0))
            return Minimizer(0.0, None, MinimizerKind.ZERO, 0.0, one)
        if a > -1.0:
            return Minimizer(1.0, None, MinimizerKind.ONE, g(1.0))
        return Minimizer(0.0, None, MinimizerKind.ZERO, 0.0)
    if a >= -expo:
        return Minimizer(1.0, None, MinimizerKind.ONE, g(1.0))
    e0 = (-2.0 * a / (s * gamma)) ** (2.0 / (s * gamma - 2.0))
    return Minimizer(e0, None, MinimizerKind.INTERIOR, g(e0))
