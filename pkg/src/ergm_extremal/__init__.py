"""Extremal phase structure of exponentiated edge-clique random graph models.

Evaluates the boundary curves of the realizable density region, the
critical slope/threshold sequences, the reduced variational problem over
edge density, the full parameter-space classification of limiting
graphon sets, exact step-graphon densities, and a finite-size sampler
for empirical cross-checks.
"""

from .classifier import (
    Box,
    Complete,
    Direction,
    Empty,
    Interior,
    LimitSet,
    ParamPoint,
    PhasePoint,
    Turan,
    UnclassifiedRegionError,
    classify,
    classify_clique_positive,
    densities_match,
    limit_oracle,
    phase_sweep,
)
from .criticals import (
    CriticalDirection,
    SlopePattern,
    critical_direction,
    gamma_n,
    gamma_n_star,
    gamma_star,
    gamma_tilde_n,
    slope,
    slope_monotonicity,
    tie_level,
)
from .curves import (
    clique_lower_bound,
    goodman,
    inflection_point,
    kruskal_katona,
    lower_boundary,
    razborov,
    turan_point,
)
from .graphon import (
    StepGraphon,
    box_graphon,
    clique_density,
    edge_density,
    rate_function,
    scale_graphon,
    triangle_density,
    turan_graphon,
)
from .lambertw import Branch, lambert_w
from .mcmc import GlauberChain, SimConfig, SimSummary, hamiltonian
from .mcmc import run as run_simulation
from .variational import (
    BetaDirection,
    Minimizer,
    MinimizerKind,
    NoInteriorRootError,
    Objective,
    grid_minimize,
    interior_root,
    left_derivative,
    nested_radical_iterates,
    objective_value,
    positive_limit_argmax,
    right_derivative,
)

__version__ = "0.1.0"
