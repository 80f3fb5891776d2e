"""Command-line surface.

Subcommands: ``classify`` (JSON verdict for one parameter point),
``table1`` (reproduces the five reference interior densities),
``curves`` (CSV of the boundary curves), ``phase`` (CSV sweep over line
slopes), ``criticals`` (slope/threshold tables), ``simulate`` (sampler
run with JSON summary and optional trace CSV).

Exit codes: 0 success, 1 invalid flags or failed table check, 2 for a
mathematically open parameter point answered numerically.
"""

import argparse
import json
import os
import sys
import time

from .classifier import (
    Box,
    Complete,
    Direction,
    Empty,
    Interior,
    ParamPoint,
    Turan,
    UnclassifiedRegionError,
    classify,
    densities_match,
    limit_oracle,
    phase_sweep,
)
from .criticals import gamma_n, gamma_n_star, gamma_tilde_n, slope
from .curves import (
    goodman,
    inflection_point,
    kruskal_katona,
    lower_boundary,
    turan_edge_density,
)
from .mcmc import SimConfig, run as run_chain
from .variational import interior_root

__all__ = ["main", "worker_count", "reference_interior_table", "PAPER_TABLE"]

# (label, segment, gamma, a, expected interior density); a = None means -s_2(gamma)
PAPER_TABLE = (
    ("-s_2", 2, 2.0, None, 0.575),
    ("-s_2", 2, 4.0, None, 0.599),
    ("-s_2", 2, 10.0, None, 0.625),
    ("-s_2", 2, 100.0, None, 0.658),
    ("-1.1", 3, 2.0, -1.1, 0.703),
)
_TABLE_TOL = 5e-4


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags by default; 2 is reserved here
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def worker_count():
    """Parallelism cap from ERGM_EXTREMAL_THREADS (default: hardware count)."""
    raw = os.environ.get("ERGM_EXTREMAL_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _member_payload(m):
    if isinstance(m, Empty):
        return {"type": "empty", "edge_density": 0.0}
    if isinstance(m, Complete):
        return {"type": "complete", "edge_density": 1.0}
    if isinstance(m, Turan):
        return {
            "type": "turan",
            "classes": m.classes,
            "scale": m.scale,
            "edge_density": m.edge_density,
        }
    if isinstance(m, Box):
        return {"type": "box", "side": m.side, "edge_density": m.edge_density}
    if isinstance(m, Interior):
        return {
            "type": "interior",
            "segment": m.segment,
            "edge_density": m.e_star,
            "triangle_density": m.t_star,
        }
    raise TypeError(f"unknown member {m!r}")


def cmd_classify(args):
    try:
        point = ParamPoint(
            gamma=args.gamma,
            a=args.a,
            b=args.b,
            direction=Direction(args.direction),
            beta1=args.beta1,
            chromatic_r=args.chromatic,
            clique_s=args.clique,
        )
    except ValueError as err:
        print(f"classify: {err}", file=sys.stderr)
        return 1
    try:
        limit = classify(point)
    except UnclassifiedRegionError as err:
        payload = {
            "kind": "unclassified",
            "members": [],
            "oracle_e": err.oracle.e_star,
            "certified": False,
        }
        print(json.dumps(payload, sort_keys=True))
        return 2
    oracle = limit_oracle(point)
    payload = {
        "kind": limit.kind(),
        "members": [_member_payload(m) for m in limit.members],
        "oracle_e": None if oracle is None else oracle.e_star,
        "certified": True if oracle is None else densities_match(limit, oracle),
    }
    print(json.dumps(payload, sort_keys=True))
    return 0


def reference_interior_table():
    """Computed vs expected interior densities for the five reference cells."""
    rows = []
    for label, segment, gamma, a, expected in PAPER_TABLE:
        a_val = -slope(2, gamma) if a is None else a
        computed = interior_root(segment, a_val, gamma)
        rows.append((label, gamma, computed, expected, abs(computed - expected)))
    return rows


def cmd_table1(_args):
    start = time.perf_counter()
    rows = reference_interior_table()
    elapsed = time.perf_counter() - start
    print(f"{'a':>6} {'gamma':>7} {'computed':>12} {'expected':>9} {'deviation':>11}")
    for label, gamma, computed, expected, dev in rows:
        print(f"{label:>6} {gamma:>7g} {computed:>12.6f} {expected:>9.3f} {dev:>11.2e}")
    worst = max(dev for *_, dev in rows)
    print(f"max deviation: {worst:.2e} (tolerance {_TABLE_TOL:.0e}), {elapsed:.3f}s")
    return 0 if worst <= _TABLE_TOL else 1


def cmd_curves(args):
    if args.resolution < 10:
        print("curves: --resolution must be >= 10", file=sys.stderr)
        return 1
    res = args.resolution
    es = [i / res for i in range(res + 1)]
    es.extend(
        turan_edge_density(k)
        for k in range(1, res)
        if turan_edge_density(k) <= 1.0 - 1.0 / res
    )
    es = sorted(set(es))
    merged = [es[0]]
    for e in es[1:]:
        if e - merged[-1] > 1e-12:
            merged.append(e)
    print("e,lower,upper,goodman")
    for e in merged:
        lower = lower_boundary(e, args.gamma)
        upper = kruskal_katona(e, 3, args.gamma)
        good = goodman(e, args.gamma)
        print(f"{e!r},{lower!r},{upper!r},{good!r}")
    return 0


def _phase_row(point):
    if point.limit is None:
        return "unclassified", point.oracle.e_star, ""
    kind = point.limit.kind()
    primary = point.limit.members[0]
    segment = primary.segment if isinstance(primary, Interior) else ""
    return kind, primary.edge_density, segment


def cmd_phase(args):
    if args.steps < 1:
        print("phase: --steps must be >= 1", file=sys.stderr)
        return 1
    if args.steps == 1:
        grid = [args.a_min]
    else:
        width = (args.a_max - args.a_min) / (args.steps - 1)
        grid = [args.a_min + i * width for i in range(args.steps)]
    print("a,kind,e_star,segment")
    for point in phase_sweep(args.gamma, grid, args.b, max_workers=worker_count()):
        kind, e_star, segment = _phase_row(point)
        print(f"{point.a!r},{kind},{e_star!r},{segment}")
    return 0


_SEQUENCES = {
    "gamma_n": (gamma_n, 3, lambda n: 2.0 * n / 9.0),
    "gamma_tilde_n": (gamma_tilde_n, 2, lambda n: 4.0 * n / 9.0),
    "gamma_n_star": (gamma_n_star, 3, lambda n: 2.0 / 3.0),
}


def cmd_criticals(args):
    if args.sequence:
        if args.n_max is None:
            print("criticals: --sequence needs --n-max", file=sys.stderr)
            return 1
        func, start, asymptote = _SEQUENCES[args.sequence]
        if args.n_max < start:
            print(f"criticals: --n-max must be >= {start} for {args.sequence}", file=sys.stderr)
            return 1
        print("n,value,ratio_to_asymptote")
        for n in range(start, args.n_max + 1):
            value = func(n)
            print(f"{n},{value!r},{value / asymptote(n)!r}")
        return 0
    if args.gamma is None or args.k_max is None:
        print("criticals: need --gamma and --k-max, or --sequence", file=sys.stderr)
        return 1
    if args.k_max < 1:
        print("criticals: --k-max must be >= 1", file=sys.stderr)
        return 1
    print("k,slope,inflection")
    for k in range(1, args.k_max + 1):
        infl = inflection_point(k, args.gamma) if k >= 2 else None
        tail = "" if infl is None else repr(infl)
        print(f"{k},{slope(k, args.gamma)!r},{tail}")
    return 0


def cmd_simulate(args):
    try:
        cfg = SimConfig(
            n=args.n,
            gamma=args.gamma,
            beta2=args.beta2,
            a=args.a,
            b=args.b,
            sweeps=args.sweeps,
            burnin=args.burnin,
            seed=args.seed,
        )
    except ValueError as err:
        print(f"simulate: {err}", file=sys.stderr)
        return 1
    summary = run_chain(cfg, collect_trace=args.trace is not None)
    if args.trace is not None:
        try:
            with open(args.trace, "w") as fh:
                fh.write("sweep,edge_density,triangle_density\n")
                for sweep, e, t in summary.trace:
                    fh.write(f"{sweep},{e!r},{t!r}\n")
        except OSError as err:
            print(f"simulate: cannot write trace: {err}", file=sys.stderr)
            return 1
    payload = {
        "mean_edge_density": summary.mean_edge_density,
        "mean_triangle_density": summary.mean_triangle_density,
        "acceptance_rate": summary.acceptance_rate,
        "seed": summary.seed,
    }
    print(json.dumps(payload, sort_keys=True))
    return 0


def _build_parser():
    parser = _Parser(prog="ergm-extremal", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="limiting graphon set for one parameter point")
    p.add_argument("--gamma", type=float)
    p.add_argument("--a", type=float)
    p.add_argument("--b", type=float)
    p.add_argument(
        "--direction",
        required=True,
        choices=[d.value for d in Direction],
    )
    p.add_argument("--beta1", type=float)
    p.add_argument("--chromatic", type=int)
    p.add_argument("--clique", type=int, default=3)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("table1", help="reproduce the reference interior densities")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("curves", help="CSV of lower/upper/goodman boundary curves")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--resolution", type=int, required=True)
    p.set_defaults(func=cmd_curves)

    p = sub.add_parser("phase", help="CSV phase sweep over the line slope a")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--a-min", dest="a_min", type=float, required=True)
    p.add_argument("--a-max", dest="a_max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--b", type=float, required=True)
    p.set_defaults(func=cmd_phase)

    p = sub.add_parser("criticals", help="slope table or critical gamma sequences")
    p.add_argument("--gamma", type=float)
    p.add_argument("--k-max", dest="k_max", type=int)
    p.add_argument("--sequence", choices=sorted(_SEQUENCES))
    p.add_argument("--n-max", dest="n_max", type=int)
    p.set_defaults(func=cmd_criticals)

    p = sub.add_parser("simulate", help="run the sampler, print a JSON summary")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--beta2", type=float, required=True)
    p.add_argument("--sweeps", type=int, required=True)
    p.add_argument("--burnin", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trace")
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
