"""Command-line front end: CSV and key=value reports.

Angles are given in degrees on the command line and converted to radians.
Floats are printed with 9 significant digits and a '.' decimal point.
Exit codes: 0 success, 2 usage or configuration error, 3 non-convergence.
"""
from __future__ import annotations

import argparse
import contextlib
import math
import sys

import numpy as np

from . import frontier, optimizer, scenario
from .errors import InvalidArgumentError

EXIT_OK, EXIT_USAGE, EXIT_NOCONV = 0, 2, 3

FRONTIER_HEADER = "phi_rad,theta0_rad,D,I_nats,saturated"
DAVIES_HEADER = "trial,dim,I_at_N,max_improvement_beyond_N"
LAMBDA_HEADER = "d_tol,lambda_rad,abs_sin_lambda,I_nats,I_frontier,D,converged"


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    return format(float(x) + 0.0, ".9g")   # + 0.0 folds -0.0 into 0


def _alpha(args) -> float:
    if not 0.0 <= args.alpha_deg <= 45.0:
        raise UsageError("--alpha-deg must lie in [0, 45]")
    return math.radians(args.alpha_deg)


@contextlib.contextmanager
def _output(path: str):
    if path == "-":
        yield sys.stdout
        return
    try:
        fh = open(path, "w", newline="\n", encoding="ascii")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from exc
    with fh:
        yield fh


def frontier_rows(alpha: float, points: int) -> list[str]:
    rows = [FRONTIER_HEADER]
    if abs(math.cos(2 * alpha)) < 1e-15:
        # identical signals: the whole curve collapses to (D, I) = (0, 0)
        p = frontier.frontier_point(alpha, frontier.QUARTER_PI)
        rows.append(",".join([fmt(p.phi), fmt(p.theta0), "0", "0", "1"]))
        return rows
    pts = frontier.frontier_curve(alpha, points)
    sat = frontier.saturation_point(alpha)
    if sat is not None:
        pts.append(sat)
    for p in pts:
        rows.append(",".join([fmt(p.phi), fmt(p.theta0), fmt(p.D0), fmt(p.I),
                              "1" if p.saturated else "0"]))
    return rows


def cmd_frontier(args) -> int:
    if args.points < 2:
        raise UsageError("--points must be at least 2")
    rows = frontier_rows(_alpha(args), args.points)
    with _output(args.out) as fh:
        fh.write("\n".join(rows) + "\n")
    return EXIT_OK


def cmd_optimize(args) -> int:
    if args.restarts < 1:
        raise UsageError("--restarts must be at least 1")
    try:
        cfg = optimizer.MeritConfig(_alpha(args), args.dtol, args.penalty, args.merit)
    except InvalidArgumentError as exc:
        raise UsageError(str(exc)) from exc
    rep = optimizer.maximize_merit(cfg, seed=args.seed, restarts=args.restarts)
    p = rep.params
    lines = [
        f"lambda={fmt(p.lam)}", f"mu={fmt(p.mu)}", f"theta={fmt(p.theta)}", f"phi={fmt(p.phi)}",
        f"D={fmt(rep.D)}", f"I_nats={fmt(rep.I)}", f"merit={fmt(rep.merit)}",
        f"converged={'true' if rep.converged else 'false'}", f"seed={rep.seed}",
    ]
    with _output(args.out) as fh:
        fh.write("\n".join(lines) + "\n")
    return EXIT_OK if rep.converged else EXIT_NOCONV


def cmd_scenario(args) -> int:
    rep = scenario.scenario_report(_alpha(args))
    lines = [
        f"theta_deg={fmt(math.degrees(rep.theta))}", f"I_AE={fmt(rep.I_AE)}",
        f"I_EB={fmt(rep.I_EB)}", f"I_AB={fmt(rep.I_AB)}", f"z_AB={fmt(rep.z_AB)}",
        f"D={fmt(rep.D)}",
    ]
    with _output(args.out) as fh:
        fh.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_davies(args) -> int:
    if args.dim not in (2, 3, 4):
        raise UsageError("--dim must be 2, 3 or 4")
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    trials = optimizer.davies_experiment([args.dim], args.trials, seed=args.seed)
    rows = [DAVIES_HEADER] + [
        f"{i},{t.dim},{fmt(t.info_at_n)},{fmt(t.improvement)}" for i, t in enumerate(trials)
    ]
    with _output(args.out) as fh:
        fh.write("\n".join(rows) + "\n")
    return EXIT_OK


def cmd_lambda_study(args) -> int:
    if args.points < 2:
        raise UsageError("--points must be at least 2")
    if args.restarts < 1:
        raise UsageError("--restarts must be at least 1")
    alpha = _alpha(args)
    grid = np.linspace(0.0, frontier.max_disturbance_d1(alpha), args.points)
    table = optimizer.lambda_zero_study(alpha, grid, seed=args.seed, restarts=args.restarts)
    rows = [LAMBDA_HEADER] + [
        ",".join([fmt(r.d_tol), fmt(r.lam), fmt(r.sin_lam), fmt(r.I), fmt(r.I_frontier),
                  fmt(r.D), "true" if r.converged else "false"])
        for r in table
    ]
    with _output(args.out) as fh:
        fh.write("\n".join(rows) + "\n")
    return EXIT_OK if all(r.converged for r in table) else EXIT_NOCONV


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="infodisturb",
        description="Information-disturbance tradeoff for two nonorthogonal qubit signals.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, alpha_default=None):
        p.add_argument("--alpha-deg", type=float, required=alpha_default is None,
                       default=alpha_default, help="half-angle between the signals, degrees")
        p.add_argument("--out", default="-", help="output file, '-' for stdout")

    p = sub.add_parser("frontier", help="analytic I(D) curve as CSV")
    common(p)
    p.add_argument("--points", type=int, default=11)
    p.set_defaults(func=cmd_frontier)

    p = sub.add_parser("optimize", help="numerical search at a tolerated disturbance")
    common(p)
    p.add_argument("--dtol", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=20)
    p.add_argument("--penalty", type=float, default=1000.0)
    p.add_argument("--merit", choices=optimizer.MERIT_MODES, default="quadratic")
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("scenario", help="Alice-Eve-Bob informations at the resend angle")
    common(p)
    p.set_defaults(func=cmd_scenario)

    p = sub.add_parser("davies", help="outcome-count experiment on random state pairs")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--trials", type=int, default=30)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_davies)

    p = sub.add_parser("lambda-study", help="lambda at the optimum across [0, D1]")
    common(p)
    p.add_argument("--points", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=20)
    p.set_defaults(func=cmd_lambda_study)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if getattr(args, "seed", 0) < 0:
            raise UsageError("--seed must be nonnegative")
        return args.func(args)
    except (UsageError, InvalidArgumentError) as exc:
        print(f"infodisturb: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
