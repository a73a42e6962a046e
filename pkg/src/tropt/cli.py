"""Command-line front end: solve, verify and plot problem files.

Exit codes: 0 for an optimal (or agreeing) result, 1 for an infeasible
instance or an oracle disagreement, 2 for input errors.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from .errors import GridGuardError, TroptError
from .location import to_general_problem
from .oracle import GridSpec, brute_force_min, default_grid
from .probfile import ParsedProblem, dump_json, load_problem, report_dict, solve_parsed
from .semifield import SEMIFIELDS
from .solve import InfeasibilityReport, contains, solve_instance
from .svg import render_svg

__all__ = ["main"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropt",
        description="Closed-form solvers for constrained optimization over idempotent semifields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("file", help="problem file (JSON)")
        p.add_argument("--semifield", choices=sorted(SEMIFIELDS),
                       help="override the file's semifield tag")
        p.add_argument("--epsilon", type=float, default=None,
                       help="comparison tolerance (default: semifield policy; "
                            "env TROPT_EPSILON)")
        p.add_argument("--out", help="write output here instead of stdout")

    p_solve = sub.add_parser("solve", help="solve a problem file and report the solution")
    common(p_solve)

    p_verify = sub.add_parser("verify", help="cross-check the solver against the grid oracle")
    common(p_verify)
    p_verify.add_argument("--grid-step", type=float, default=0.5)
    p_verify.add_argument("--grid-lo", help="comma-separated lower grid bounds")
    p_verify.add_argument("--grid-hi", help="comma-separated upper grid bounds")

    p_plot = sub.add_parser("plot", help="render a 2-D instance and its solution as SVG")
    common(p_plot)
    return parser


def _epsilon(args) -> float | None:
    if args.epsilon is not None:
        return args.epsilon
    env = os.environ.get("TROPT_EPSILON")
    return float(env) if env else None


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_bound(raw: str | None, n: int, name: str):
    if raw is None:
        return None
    try:
        vals = [float(v) for v in raw.split(",")]
    except ValueError as exc:
        raise TroptError(f"{name}: expected comma-separated numbers, got {raw!r}") from exc
    if len(vals) != n:
        raise TroptError(f"{name}: expected {n} values, got {len(vals)}")
    return np.array(vals)


def _general_instance(parsed: ParsedProblem):
    if parsed.problem_type == "location":
        return to_general_problem(parsed.location)
    return parsed.instance


def _cmd_solve(args) -> int:
    parsed = load_problem(args.file, semifield_override=args.semifield)
    result = solve_parsed(parsed)
    _emit(dump_json(report_dict(result)), args.out)
    return 1 if isinstance(result, InfeasibilityReport) else 0


def _cmd_verify(args) -> int:
    parsed = load_problem(args.file, semifield_override=args.semifield)
    eps = _epsilon(args)
    inst = _general_instance(parsed)
    result = solve_instance(inst)

    lo = _parse_bound(args.grid_lo, inst.n, "--grid-lo")
    hi = _parse_bound(args.grid_hi, inst.n, "--grid-hi")
    if (lo is None) != (hi is None):
        raise TroptError("--grid-lo and --grid-hi must be given together")
    grid = GridSpec(lo, hi, args.grid_step) if lo is not None else default_grid(
        inst, step=args.grid_step
    )
    oracle = brute_force_min(inst, grid, eps=eps)

    report: dict = {"status": None, "grid_points": grid.point_count()}
    code = 1
    if isinstance(result, InfeasibilityReport):
        report["solver"] = report_dict(result)
        report["oracle_feasible_points"] = oracle.feasible_count
        agree = oracle.empty
        report["status"] = "agree" if agree else "disagree"
        report["summary"] = (
            "agree: infeasible" if agree
            else f"disagree: solver infeasible but oracle found {oracle.feasible_count} feasible points"
        )
        code = 1
    else:
        theta = result.theta
        agree = (not oracle.empty) and oracle.min_value.eq(theta, eps)
        members = all(
            contains(result, inst, _as_vec(inst, x), eps) for x in oracle.argmins
        ) if agree else False
        report["solver_theta"] = theta.value
        report["oracle_min"] = None if oracle.empty else oracle.min_value.value
        report["argmin_count"] = len(oracle.argmins)
        report["argmins_contained"] = members
        ok = agree and members
        report["status"] = "agree" if ok else "disagree"
        report["summary"] = (
            f"agree: theta = {_fmt_theta(theta.value)}" if ok
            else f"disagree: solver theta = {theta.value}, oracle = "
                 f"{None if oracle.empty else oracle.min_value.value}"
        )
        code = 0 if ok else 1
    _emit(dump_json(report), args.out)
    return code


def _fmt_theta(v: float) -> str:
    return str(int(v)) if v == int(v) else f"{v:.12g}"


def _as_vec(inst, values):
    from .linalg import tvector

    return tvector(inst.sf, values)


def _cmd_plot(args) -> int:
    parsed = load_problem(args.file, semifield_override=args.semifield)
    result = solve_parsed(parsed)
    if isinstance(result, InfeasibilityReport):
        _emit(dump_json(report_dict(result)), None)
        return 1
    _emit(render_svg(parsed, result), args.out)
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "solve":
            return _cmd_solve(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_plot(args)
    except GridGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (TroptError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
