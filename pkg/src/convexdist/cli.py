"""Command-line front end: pair reports, family sweeps, slope fits,
random verification suites, constants, and Monte Carlo estimates.

Exit codes: 0 ok, 2 parse failure, 3 containment failure, 4 bad
configuration, 5 internal error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction as Q

import numpy as np

from . import caps, fitting, metrics, polyio
from .bodies import random_body_in
from .estimator import mc_volume_distance
from .geometry import KernelError, VPolytope
from .scalar import as_fraction, fraction_str

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CONTAINMENT = 3
EXIT_CONFIG = 4
EXIT_INTERNAL = 5


class ConfigError(Exception):
    pass


def _load_kernel_body(path) -> VPolytope:
    body = polyio.load_polytope(path)
    if not isinstance(body, VPolytope):
        raise ConfigError(
            f"{path}: dimension {body.dim} is outside the exact kernel; "
            "only the estimate subcommand accepts it")
    return body


def _parse_direction(text: str):
    try:
        return tuple(as_fraction(c) for c in text.split(","))
    except ValueError as exc:
        raise ConfigError(f"bad direction {text!r}: {exc}") from exc


REPORT_HEADER = ["n", "dG", "rhoG", "dH", "dH_sq", "sandwich_ok",
                 "lipschitz_ok", "power_lower_ok"]


def _report_row(rep: metrics.MetricReport):
    return [rep.n, rep.dG, rep.rhoG, rep.dH, rep.dH_sq, rep.sandwich_ok,
            rep.lipschitz_ok, rep.power_lower_ok]


def cmd_report(args) -> int:
    G = _load_kernel_body(args.body)
    K = _load_kernel_body(args.k)
    L = _load_kernel_body(args.l)
    rep = metrics.metric_report(G, K, L)
    print(f"n={rep.n}")
    print(f"dG={fraction_str(rep.dG)}  rhoG={fraction_str(rep.rhoG)}  "
          f"dH={rep.dH!r}")
    print(f"sandwich_ok={rep.sandwich_ok}  lipschitz_ok={rep.lipschitz_ok}  "
          f"power_lower_ok={rep.power_lower_ok}")
    if args.out:
        polyio.write_csv(args.out, REPORT_HEADER, [_report_row(rep)])
    return EXIT_OK


SWEEP_HEADER = ["t", "s", "h", "dH", "dG", "rhoG", "volC",
                "height_ok", "volume_bound_ok", "dh_monotone_ok",
                "rho_closed_form_ok", "dh_closed_form_ok"]


def _sweep_rows(points):
    rows = []
    for p in points:
        c = p.checks
        rows.append([
            p.t, p.t if p.vol_cap is not None else None,
            p.geometric_height, p.dH, p.dG, p.rhoG, p.vol_cap,
            c.get("height"), c.get("volume_bound"), c.get("dh_monotone"),
            c.get("rho_closed_form"), c.get("dh_closed_form"),
        ])
    return rows


def cmd_sweep(args) -> int:
    G = _load_kernel_body(args.body)
    if args.steps < 4:
        raise ConfigError("need at least 4 steps for downstream slope fits")
    t_min = as_fraction(args.t_min)
    t_max = as_fraction(args.t_max)
    if not 0 < t_min < t_max:
        raise ConfigError("need 0 < t-min < t-max")
    schedule = caps.geometric_schedule(t_min, t_max, args.steps)
    if args.family == "cap-slice":
        d = _parse_direction(args.dir) if args.dir else None
        points = caps.cap_slice_family(G, d, schedule)
    elif args.family == "scaling":
        if t_max >= 1:
            raise ConfigError("scaling family needs t-max < 1 (t = 1 - r)")
        ratios = sorted((1 - t for t in schedule))
        points = caps.scaling_family(G, ratios, origin=args.origin)
    else:
        raise ConfigError(f"unknown family {args.family!r}")
    polyio.write_csv(args.out, SWEEP_HEADER, _sweep_rows(points))
    print(f"wrote {len(points)} rows to {args.out}")
    if args.svg:
        xs = [p.dH for p in points]
        ys = [float(p.dG) for p in points]
        try:
            fit = fitting.fit_power_law(xs, ys)
            polyio.write_loglog_svg(args.svg, xs, ys, fit.slope, fit.intercept)
        except ValueError:
            polyio.write_loglog_svg(args.svg, xs, ys)
        print(f"wrote plot to {args.svg}")
    return EXIT_OK


def cmd_fit(args) -> int:
    header, rows = polyio.read_csv(args.csv)
    try:
        xi = header.index(args.x_col)
        yi = header.index(args.y_col)
    except ValueError as exc:
        raise ConfigError(f"missing column: {exc}") from exc
    def cell_to_float(text: str) -> float:
        return float(Q(text)) if "/" in text else float(text)

    xs, ys = [], []
    for row in rows:
        if row[xi] == "" or row[yi] == "":
            continue
        xs.append(cell_to_float(row[xi]))
        ys.append(cell_to_float(row[yi]))
    window = tuple(float(w) for w in args.window) if args.window else None
    try:
        fit = fitting.fit_power_law(xs, ys, window)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    print(f"slope={fit.slope:.6f} intercept={fit.intercept:.6f} "
          f"r2={fit.r2:.6f} points={fit.npoints} "
          f"window=[{fit.window[0]:.6g}, {fit.window[1]:.6g}]")
    inw = [(x, y) for x, y in zip(xs, ys)
           if fit.window[0] <= x <= fit.window[1]]
    for (x, _), r in zip(inw, fit.residuals(*zip(*inw))):
        print(f"  residual at {x:.6g}: {r:+.3e}")
    return EXIT_OK


def cmd_verify(args) -> int:
    G = _load_kernel_body(args.body)
    rng = np.random.default_rng(args.seed)
    bodies = [random_body_in(G, rng) for _ in range(2 * args.pairs)]
    rows = []
    violations = 0
    reports = []
    for i in range(args.pairs):
        rep = metrics.metric_report(G, bodies[2 * i], bodies[2 * i + 1])
        reports.append(rep)
        rows.append(_report_row(rep))
        if not rep.ok():
            violations += 1
    triples = [(bodies[3 * i], bodies[3 * i + 1], bodies[3 * i + 2])
               for i in range(len(bodies) // 3)]
    ratio = metrics.quasi_triangle_probe(G, triples) if triples else None
    print(f"pairs={args.pairs} violations={violations}")
    if ratio is not None:
        print(f"quasi_triangle_ratio={float(ratio)!r}")
    if args.out:
        polyio.write_csv(args.out, REPORT_HEADER, rows)
    return EXIT_OK


def cmd_constants(args) -> int:
    G = _load_kernel_body(args.body)
    rep = caps.theoretical_constants(G, roll_radius=args.roll_radius)
    print(f"n={rep.n}")
    print(f"diam={rep.diam!r} (diam_sq={fraction_str(rep.diam_sq)})")
    print(f"inradius_lb={fraction_str(rep.r_lb)} "
          f"inradius_ub={fraction_str(rep.r_ub)}")
    print(f"c_upper={rep.c_upper} ({rep.c_upper_value!r})")
    print(f"c_lower={rep.c_lower_value!r}")
    print(f"omega={[round(w, 12) for w in rep.omega]}")
    if rep.c_smooth is not None:
        print(f"c_smooth={rep.c_smooth!r} "
              f"(displayed-form value {rep.c_smooth_displayed!r}, not asserted)")
    return EXIT_OK


def cmd_estimate(args) -> int:
    G = polyio.load_polytope(args.body)
    K = polyio.load_polytope(args.k)
    L = polyio.load_polytope(args.l)
    est = mc_volume_distance(G, K, L, args.samples, args.seed)
    print(f"rho_estimate={est.value!r} ci95={est.ci95_halfwidth!r} "
          f"samples={est.samples}")
    for name, part in est.parts.items():
        print(f"  {name}: {part.mean!r} +- {part.ci95_halfwidth!r}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="convexdist",
        description="mixed-volume distances between convex bodies")
    sub = ap.add_subparsers(dest="command", required=True)

    def body_arg(p):
        p.add_argument("--body", "-g", required=True,
                       help="reference body JSON file")

    p = sub.add_parser("report", help="exact pair report with bound checks")
    body_arg(p)
    p.add_argument("--k", required=True)
    p.add_argument("--l", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("sweep", help="cap/slice or scaling family sweep")
    body_arg(p)
    p.add_argument("--family", default="cap-slice",
                   choices=["cap-slice", "scaling"])
    p.add_argument("--dir", help='direction "a,b[,c]" (default: farthest vertex)')
    p.add_argument("--t-min", required=True)
    p.add_argument("--t-max", required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--origin", default="chebyshev",
                   choices=["chebyshev", "vertex"])
    p.add_argument("--out", required=True)
    p.add_argument("--svg")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("fit", help="log-log slope fit of a sweep CSV")
    p.add_argument("csv")
    p.add_argument("--window", nargs=2, metavar=("LO", "HI"))
    p.add_argument("--x-col", default="dH")
    p.add_argument("--y-col", default="dG")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("verify", help="random-pair bound verification suite")
    body_arg(p)
    p.add_argument("--pairs", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("constants", help="explicit comparison constants")
    body_arg(p)
    p.add_argument("--roll-radius", type=float)
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("estimate", help="Monte Carlo distance estimate")
    body_arg(p)
    p.add_argument("--k", required=True)
    p.add_argument("--l", required=True)
    p.add_argument("--samples", type=int, default=100000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--box", default="auto",
                   help="sampling box policy (auto only)")
    p.set_defaults(func=cmd_estimate)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except polyio.PolytopeParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except metrics.ContainmentError as exc:
        print(f"containment error: {exc}", file=sys.stderr)
        return EXIT_CONTAINMENT
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (KernelError, ValueError, ArithmeticError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
