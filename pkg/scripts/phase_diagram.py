#!/usr/bin/env python3
"""Emit phase-diagram and boundary-curve CSVs for a list of exponents.

Writes one phase CSV (limit kind and optimal edge density along a slope
grid) and one curve CSV (floor/ceiling/coarse-floor values) per gamma
into the output directory.  Plot them with your tool of choice.

Example:
    python scripts/phase_diagram.py --out out/ --gammas 0.5,0.7,0.9,2,10
"""

import argparse
from pathlib import Path

from ergm_extremal.classifier import Interior, phase_sweep
from ergm_extremal.curves import goodman, kruskal_katona, lower_boundary, turan_edge_density


def phase_rows(gamma, a_min, a_max, steps, b):
    width = (a_max - a_min) / (steps - 1)
    grid = [a_min + i * width for i in range(steps)]
    for point in phase_sweep(gamma, grid, b):
        if point.limit is None:
            yield point.a, "unclassified", point.oracle.e_star, ""
        else:
            primary = point.limit.members[0]
            segment = primary.segment if isinstance(primary, Interior) else ""
            yield point.a, point.limit.kind(), primary.edge_density, segment


def curve_rows(gamma, resolution):
    es = sorted(
        set(i / resolution for i in range(resolution + 1))
        | set(
            turan_edge_density(k)
            for k in range(1, resolution)
            if turan_edge_density(k) <= 1.0 - 1.0 / resolution
        )
    )
    for e in es:
        yield e, lower_boundary(e, gamma), kruskal_katona(e, 3, gamma), goodman(e, gamma)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path("out"))
    parser.add_argument("--gammas", default="0.5,0.7,0.9,1.5,2,10")
    parser.add_argument("--a-min", type=float, default=-4.0)
    parser.add_argument("--a-max", type=float, default=-0.01)
    parser.add_argument("--steps", type=int, default=400)
    parser.add_argument("--b", type=float, default=0.0)
    parser.add_argument("--resolution", type=int, default=500)
    args = parser.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    for raw in args.gammas.split(","):
        gamma = float(raw)
        tag = raw.strip().replace(".", "p")
        phase_path = args.out / f"phase_gamma_{tag}.csv"
        with phase_path.open("w") as fh:
            fh.write("a,kind,e_star,segment\n")
            for a, kind, e_star, segment in phase_rows(gamma, args.a_min, args.a_max, args.steps, args.b):
                fh.write(f"{a!r},{kind},{e_star!r},{segment}\n")
        curve_path = args.out / f"curves_gamma_{tag}.csv"
        with curve_path.open("w") as fh:
            fh.write("e,lower,upper,goodman\n")
            for e, lower, upper, good in curve_rows(gamma, args.resolution):
                fh.write(f"{e!r},{lower!r},{upper!r},{good!r}\n")
        print(f"gamma={gamma}: wrote {phase_path} and {curve_path}")


if __name__ == "__main__":
    main()
