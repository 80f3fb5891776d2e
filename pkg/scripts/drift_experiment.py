#!/usr/bin/env python3
"""Compare sampler drift against the classified limit at a few line slopes.

For each configured point the classifier predicts the limiting edge and
triangle densities; the chain is then run at a strongly negative beta2
and the post-burnin means are tabulated next to the prediction.  Finite
size and finite divergence keep this a qualitative check.

Example:
    python scripts/drift_experiment.py --n 40 --sweeps 300 --burnin 150
"""

import argparse

from ergm_extremal.classifier import ParamPoint, UnclassifiedRegionError, classify
from ergm_extremal.mcmc import SimConfig, run

POINTS = (
    # (gamma, a, b, beta2): 2-class target, complete target, ladder target
    (1.0, -1.0, 0.0, -40.0),
    (1.0, -3.0, 0.0, -20.0),
    (0.9, -2.0, 0.0, -40.0),
)


def predicted_densities(gamma, a, b):
    try:
        limit = classify(ParamPoint(gamma=gamma, a=a, b=b))
    except UnclassifiedRegionError as err:
        return err.oracle.e_star, float("nan"), "unclassified"
    member = limit.members[0]
    edge = member.edge_density
    triangle = getattr(member, "triangle_density", getattr(member, "t_star", float("nan")))
    if type(member).__name__ == "Complete":
        triangle = 1.0
    return edge, triangle, limit.kind()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=40)
    parser.add_argument("--sweeps", type=int, default=300)
    parser.add_argument("--burnin", type=int, default=150)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    header = f"{'gamma':>6} {'a':>6} {'beta2':>7} {'kind':>10} {'e_pred':>8} {'e_mcmc':>8} {'t_pred':>8} {'t_mcmc':>8}"
    print(header)
    for gamma, a, b, beta2 in POINTS:
        e_pred, t_pred, kind = predicted_densities(gamma, a, b)
        cfg = SimConfig(
            n=args.n, gamma=gamma, beta2=beta2, a=a, b=b,
            sweeps=args.sweeps, burnin=args.burnin, seed=args.seed,
        )
        summary = run(cfg)
        print(
            f"{gamma:>6g} {a:>6g} {beta2:>7g} {kind:>10} "
            f"{e_pred:>8.4f} {summary.mean_edge_density:>8.4f} "
            f"{t_pred:>8.4f} {summary.mean_triangle_density:>8.4f}"
        )


if __name__ == "__main__":
    main()
