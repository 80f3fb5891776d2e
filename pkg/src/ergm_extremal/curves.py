"""Boundary curves of the realizable edge/clique density region.

Turán landmark points, the tight piecewise lower bound on triangle
density given edge density (flag-algebra bound, one radical segment per
interval [(k-1)/k, k/(k+1)]), Goodman's coarser bound, the Kruskal-Katona
upper bound, the general s-clique lower bound, and the inflection points
that the powered segments develop for large exponents.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

__all__ = [
    "TuranPoint",
    "turan_point",
    "turan_edge_density",
    "turan_triangle_density",
    "segment_domain",
    "segment_of",
    "razborov",
    "lower_boundary",
    "lower_boundary_grid",
    "goodman",
    "goodman_derivative",
    "kruskal_katona",
    "clique_lower_bound",
    "inflection_point",
]

_DOMAIN_TOL = 1e-12


def turan_edge_density(k):
    """Edge density k/(k+1) of the complete multipartite graphon on k+1 classes."""
    return k / (k + 1.0)


def turan_triangle_density(k):
    """Triangle density k(k-1)/(k+1)^2 of the same graphon."""
    return k * (k - 1.0) / (k + 1.0) ** 2


@dataclass(frozen=True)
class TuranPoint:
    """Exact (edge, triangle) densities of the k+1-class Turán graphon."""

    k: int
    edge: Fraction
    triangle: Fraction


def turan_point(k):
    if k < 0:
        raise ValueError(f"Turán index must be >= 0, got {k}")
    return TuranPoint(k, Fraction(k, k + 1), Fraction(k * (k - 1), (k + 1) ** 2))


def segment_domain(k):
    """Closed edge-density interval [(k-1)/k, k/(k+1)] of boundary segment k."""
    if k < 1:
        raise ValueError(f"segment index must be >= 1, got {k}")
    return (k - 1) / k, k / (k + 1.0)


def segment_of(e):
    """Index of the segment containing e in [0, 1).

    Shared endpoints resolve to the lower index; the two segments agree
    there, so the choice is unobservable.
    """
    if not 0.0 <= e < 1.0:
        raise ValueError(f"edge density {e!r} outside [0, 1)")
    if e < 0.5:
        return 1
    k = max(1, math.ceil(e / (1.0 - e) - 1e-9))
    # the fuzz above keeps exact endpoints on the lower segment; points past
    # the right endpoint belong to the next one
    if e > k / (k + 1.0):
        k += 1
    return k


def razborov(k, e):
    """Tight triangle-density floor r_k(e) on segment k.

    The segment endpoints reproduce consecutive Turán points; the radical
    argument is clamped at 0 so that float fuzz at the right endpoint
    cannot escape the domain of sqrt.
    """
    lo, hi = segment_domain(k)
    if not lo - _DOMAIN_TOL <= e <= hi + _DOMAIN_TOL:
        raise ValueError(f"edge density {e!r} outside segment {k} domain [{lo}, {hi}]")
    rad = math.sqrt(max(k * (k - e * (k + 1.0)), 0.0))
    val = (k - 1.0) * (k - 2.0 * rad) * (k + rad) ** 2 / (k * k * (k + 1.0) ** 2)
    return max(val, 0.0)


def lower_boundary(e, gamma):
    """Piecewise triangle-density floor raised to gamma, evaluated at e."""
    if gamma <= 0.0:
        raise ValueError(f"gamma must be positive, got {gamma!r}")
    if not -_DOMAIN_TOL <= e <= 1.0 + _DOMAIN_TOL:
        raise ValueError(f"edge density {e!r} outside [0, 1]")
    if e >= 1.0:
        return 1.0
    if e <= 0.0:
        return 0.0
    return razborov(segment_of(e), e) ** gamma


def lower_boundary_grid(e, gamma):
    """Vectorized ``lower_boundary`` over an array of edge densities."""
    e = np.asarray(e, dtype=float)
    if e.size and (e.min() < -_DOMAIN_TOL or e.max() > 1.0 + _DOMAIN_TOL):
        raise ValueError("edge densities outside [0, 1]")
    safe = np.clip(e, 0.0, np.nextafter(1.0, 0.0))
    k = np.maximum(np.ceil(safe / (1.0 - safe) - 1e-9), 1.0)
    k = np.where(safe > k / (k + 1.0), k + 1.0, k)
    rad = np.sqrt(np.maximum(k * (k - safe * (k + 1.0)), 0.0))
    r = (k - 1.0) * (k - 2.0 * rad) * (k + rad) ** 2 / (k * k * (k + 1.0) ** 2)
    out = np.maximum(r, 0.0) ** gamma
    return np.where(e >= 1.0, 1.0, out)


def goodman(e, gamma):
    """(e(2e-1))_+^gamma.

    The base is clamped at 0: below e = 1/2 the true triangle floor is 0
    and fractional powers of a negative base are undefined.
    """
    return max(e * (2.0 * e - 1.0), 0.0) ** gamma


def goodman_derivative(e, gamma):
    """Slope of the gamma-powered Goodman curve, for e > 1/2."""
    if e <= 0.5:
        raise ValueError(f"derivative needs e > 1/2, got {e!r}")
    return gamma * (e * (2.0 * e - 1.0)) ** (gamma - 1.0) * (4.0 * e - 1.0)


def kruskal_katona(e, s=3, gamma=1.0):
    """Upper bound e^(s*gamma/2) on the gamma-powered s-clique density."""
    if s < 2:
        raise ValueError(f"clique size must be >= 2, got {s}")
    if e < 0.0:
        raise ValueError(f"edge density {e!r} negative")
    return e ** (s * gamma / 2.0)


def clique_lower_bound(s, t, e):
    """Minimum achievable K_s density at edge density e on segment t.

    Valid for e in [(t-1)/t, t/(t+1)] with e >= 1 - 1/(s-1); at the latter
    boundary the bound is 0.  For s = 3 this reduces to ``razborov``.
    """
    if s < 2:
        raise ValueError(f"clique size must be >= 2, got {s}")
    lo, hi = segment_domain(t)
    if not lo - _DOMAIN_TOL <= e <= hi + _DOMAIN_TOL:
        raise ValueError(f"edge density {e!r} outside segment {t} domain [{lo}, {hi}]")
    if e < 1.0 - 1.0 / (s - 1.0) - _DOMAIN_TOL:
        raise ValueError(f"edge density {e!r} below clique-{s} threshold {1 - 1/(s-1)}")
    coef = math.prod(range(t - s + 2, t)) / (t * (t + 1.0)) ** (s - 1)
    rad = math.sqrt(max(t * (t - e * (t + 1.0)), 0.0))
    return max(coef * (t - (s - 1.0) * rad) * (t + rad) ** (s - 1), 0.0)


def inflection_point(k, gamma):
    """Concavity switch of the gamma-powered segment k, or None.

    Exists only for gamma > (4+k)/6; below that the segment is concave
    down throughout and None is returned.
    """
    if k < 2:
        raise ValueError(f"segment index must be >= 2, got {k}")
    if gamma <= (4.0 + k) / 6.0:
        return None
    return (k / (k + 1.0)) * (1.0 - (1.0 / (2.0 * (3.0 * gamma - 2.0))) ** 2)
