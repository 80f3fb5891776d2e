"""Step graphons and exact clique homomorphism densities.

A step graphon is a block-constant symmetric function on [0,1]^2: block
widths plus a symmetric value matrix.  Densities are plain block sums,
so they stay exact rationals whenever the inputs are Fractions/ints
(the Turán identities anchor the test suite in exact arithmetic).
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "StepGraphon",
    "turan_graphon",
    "box_graphon",
    "scale_graphon",
    "clique_density",
    "edge_density",
    "triangle_density",
    "rate_function",
    "ComplexityError",
]

_WEIGHT_TOL = 1e-12
_DENSITY_CAP = 10 ** 8


class ComplexityError(ValueError):
    """Block count raised to the clique size exceeds the evaluation cap."""


@dataclass(frozen=True)
class StepGraphon:
    """Block widths (positive, summing to 1) and a symmetric value matrix in [0,1]."""

    weights: tuple
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        object.__setattr__(self, "values", tuple(tuple(row) for row in self.values))
        b = len(self.weights)
        if b == 0:
            raise ValueError("at least one block required")
        if any(w <= 0 for w in self.weights):
            raise ValueError("block weights must be positive")
        if abs(float(sum(self.weights)) - 1.0) > _WEIGHT_TOL:
            raise ValueError("block weights must sum to 1")
        if len(self.values) != b or any(len(row) != b for row in self.values):
            raise ValueError("value matrix must be square and match the weights")
        for i in range(b):
            for j in range(b):
                if self.values[i][j] != self.values[j][i]:
                    raise ValueError("value matrix must be symmetric")
                if not 0 <= self.values[i][j] <= 1:
                    raise ValueError("values must lie in [0, 1]")


def turan_graphon(k):
    """k equal classes, 0 within a class and 1 across; k = 1 is the empty graphon."""
    if k < 1:
        raise ValueError(f"class count must be >= 1, got {k}")
    w = Fraction(1, k)
    values = tuple(tuple(0 if i == j else 1 for j in range(k)) for i in range(k))
    return StepGraphon((w,) * k, values)


def box_graphon(side):
    """1 on the square [0, side]^2 and 0 elsewhere; clique density side^s."""
    if not 0 < side < 1:
        raise ValueError(f"side must lie in (0, 1), got {side!r}")
    return StepGraphon((side, 1 - side), ((1, 0), (0, 0)))


def scale_graphon(g, p):
    """Multiply every block value by p in [0, 1]."""
    if not 0 <= p <= 1:
        raise ValueError(f"scale must lie in [0, 1], got {p!r}")
    return StepGraphon(g.weights, tuple(tuple(p * v for v in row) for row in g.values))


def clique_density(s, g):
    """Homomorphism density of the s-clique: sum over block s-tuples of the
    weight product times all pairwise values."""
    if s < 2:
        raise ValueError(f"clique size must be >= 2, got {s}")
    b = len(g.weights)
    if b ** s > _DENSITY_CAP:
        raise ComplexityError(f"{b} blocks at clique size {s} exceeds {_DENSITY_CAP} terms")
    total = 0
    for combo in itertools.product(range(b), repeat=s):
        term = 1
        for i in range(s):
            for j in range(i + 1, s):
                term *= g.values[combo[i]][combo[j]]
            if term == 0:
                break
        if term == 0:
            continue
        for blk in combo:
            term *= g.weights[blk]
        total += term
    return total


def edge_density(g):
    return clique_density(2, g)


def triangle_density(g):
    return clique_density(3, g)


def rate_function(u):
    """Bernoulli large-deviation rate (u log u + (1-u) log(1-u))/2, with the
    continuous-extension convention I(0) = I(1) = 0."""
    if not 0 <= u <= 1:
        raise ValueError(f"argument must lie in [0, 1], got {u!r}")
    acc = 0.0
    if u > 0:
        acc += 0.5 * u * math.log(u)
    if u < 1:
        acc += 0.5 * (1 - u) * math.log(1 - u)
    return acc
