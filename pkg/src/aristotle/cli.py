"""Command-line front end.

Subcommands: ``verify`` runs the randomized identity suite, ``simulate``
writes a trajectory as CSV or JSON, ``orbit`` maps a dual point to chart
coordinates, ``act`` applies the group action to a chart point.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
Numeric output uses the shortest round-trip representation so downstream
tools can re-check identities bit for bit.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import dynamics, group, orbit, verify


def _finite(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"not finite: {text!r}")
    return value


def _fmt(x: float) -> str:
    """Shortest round-trip form; integral values print without a fraction."""
    if abs(x) < 1e16 and float(x).is_integer():
        return str(int(x))
    return repr(float(x))


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def cmd_verify(args: argparse.Namespace) -> int:
    if args.cases < 1:
        return _fail("--cases must be >= 1")
    if args.tol is not None and args.tol <= 0.0:
        return _fail("--tol must be positive")
    report = verify.run_verify(args.seed, args.cases, args.tol)
    for line in report.lines():
        print(line)
    failed = sum(1 for r in report.results if not r.passed)
    print(
        f"{len(report.results)} properties, {failed} failed "
        f"(seed={report.seed}, cases={report.cases})"
    )
    return 0 if report.passed else 1


def cmd_simulate(args: argparse.Namespace) -> int:
    try:
        cfg = dynamics.SimulationConfig(
            m=args.mass, g=args.g, p0=args.p0, q0=args.q0,
            t_max=args.t_max, dt=args.dt, integrator=args.integrator,
        )
        samples = dynamics.simulate(cfg)
    except ValueError as err:
        # Covers config validation and mid-run overflow to non-finite values.
        return _fail(str(err))

    if args.format == "csv":
        lines = ["t,p,q,H"]
        lines += [f"{_fmt(s.t)},{_fmt(s.p)},{_fmt(s.q)},{_fmt(s.H)}" for s in samples]
        payload = "\n".join(lines) + "\n"
    else:
        records = [{"t": s.t, "p": s.p, "q": s.q, "H": s.H} for s in samples]
        payload = json.dumps(records) + "\n"

    if args.out is None:
        sys.stdout.write(payload)
    else:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(payload)
        except OSError as err:
            return _fail(f"cannot write {args.out!r}: {err}")
    return 0


def cmd_orbit(args: argparse.Namespace) -> int:
    try:
        ctx = orbit.OrbitContext(args.m, args.g)
        point = orbit.to_chart(ctx, orbit.CoadjointPoint(args.m, args.e, args.p))
    except ValueError as err:  # degenerate orbit, or overflow to non-finite
        return _fail(str(err))
    print(f"p={_fmt(point.p)} q={_fmt(point.q)}")
    return 0


def cmd_act(args: argparse.Namespace) -> int:
    try:
        ctx = orbit.OrbitContext(args.mass, args.g)
        moved = orbit.canonical_act(
            ctx, group.BaseElement(args.t, args.h), orbit.OrbitPoint(args.p, args.q)
        )
    except ValueError as err:
        return _fail(str(err))
    print(f"p={_fmt(moved.p)} q={_fmt(moved.q)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aristotle",
        description="Coadjoint-orbit mechanics of the extended static group.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_verify = sub.add_parser("verify", help="run the randomized identity suite")
    p_verify.add_argument("--seed", type=int, default=42, help="generator seed")
    p_verify.add_argument("--cases", type=int, default=1000, help="cases per property")
    p_verify.add_argument(
        "--tol", type=_finite, default=None,
        help="tolerance for the 1e-9 numerical class (pinned classes unaffected)",
    )
    p_verify.set_defaults(func=cmd_verify)

    p_sim = sub.add_parser("simulate", help="sample a trajectory to CSV or JSON")
    p_sim.add_argument("--mass", type=_finite, required=True)
    p_sim.add_argument("--g", type=_finite, required=True)
    p_sim.add_argument("--p0", type=_finite, required=True)
    p_sim.add_argument("--q0", type=_finite, required=True)
    p_sim.add_argument("--t-max", type=_finite, required=True)
    p_sim.add_argument("--dt", type=_finite, required=True)
    p_sim.add_argument("--integrator", choices=dynamics.INTEGRATORS, default="exact")
    p_sim.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sim.add_argument("--out", default=None, help="output path (default: stdout)")
    p_sim.set_defaults(func=cmd_simulate)

    p_orbit = sub.add_parser("orbit", help="map a dual point to chart coordinates")
    p_orbit.add_argument("--m", type=_finite, required=True)
    p_orbit.add_argument("--g", type=_finite, required=True)
    p_orbit.add_argument("--e", type=_finite, required=True)
    p_orbit.add_argument("--p", type=_finite, required=True)
    p_orbit.set_defaults(func=cmd_orbit)

    p_act = sub.add_parser("act", help="apply a translation to a chart point")
    p_act.add_argument("--mass", type=_finite, required=True)
    p_act.add_argument("--g", type=_finite, required=True)
    p_act.add_argument("--t", type=_finite, required=True)
    p_act.add_argument("--h", type=_finite, required=True)
    p_act.add_argument("--p", type=_finite, required=True)
    p_act.add_argument("--q", type=_finite, required=True)
    p_act.set_defaults(func=cmd_act)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
