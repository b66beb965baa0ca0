"""Command-line front end: one subcommand per experiment.

Exit status: 0 success, 1 internal error, 2 invalid input, 3 when a
``bounds``/``quantcheck``/``voronovskaja`` row violates its bound.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from . import experiments as ex
from .basis import basis_column
from .errors import GruenwaldError, InvalidArgumentError
from .functions import function_names
from .grids import make_grid
from .operators import lebesgue_like
from .reporting import to_csv, to_json
from .smoothness import c2_constant

EXIT_OK, EXIT_INTERNAL, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2, 3


def parse_n_list(text: str) -> list[int]:
    """Parse ``4,8,16``, ``2..64`` (inclusive) and ``8..512..x2`` (geometric)."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if ".." in part:
                pieces = part.split("..")
                lo, hi = int(pieces[0]), int(pieces[1])
                if len(pieces) == 3:
                    if not pieces[2].startswith("x"):
                        raise ValueError(part)
                    factor = int(pieces[2][1:])
                    if factor < 2:
                        raise ValueError(part)
                    v = lo
                    while v <= hi:
                        out.append(v)
                        v *= factor
                elif len(pieces) == 2:
                    out.extend(range(lo, hi + 1))
                else:
                    raise ValueError(part)
            else:
                out.append(int(part))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad n-list element {part!r}") from None
    if not out or min(out) < 1:
        raise argparse.ArgumentTypeError("n-list must contain positive integers")
    return out


def parse_float_list(text: str) -> list[float]:
    try:
        return [float(eval_angle(p)) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad number list {text!r}") from None


def eval_angle(text: str) -> float:
    """A float, optionally written as a multiple of pi (``pi/4``, ``-0.5*pi``)."""
    t = text.strip().lower().replace("*", "")
    if "pi" not in t:
        return float(t)
    head, tail = t.split("pi", 1)
    scale = {"": 1.0, "+": 1.0, "-": -1.0}.get(head)
    if scale is None:
        scale = float(head)
    if not tail:
        return scale * math.pi
    if not tail.startswith("/"):
        raise ValueError(text)
    return scale * math.pi / float(tail[1:])


def _add_family(p, default="chebyshev"):
    p.add_argument(
        "--family",
        default=default,
        choices=["chebyshev", "perturbed", "equidistant-shifted", "per-node-shift"],
    )
    p.add_argument("--theta0-frac", type=float, default=0.0,
                   help="theta0 as a fraction of pi/(2n); |x| < 1")
    p.add_argument("--eta0-frac", type=float, default=0.5, help="eta0 as a fraction of pi/n")
    p.add_argument("--beta-frac", type=float, default=0.0, help="beta as a fraction of pi/n")
    p.add_argument("--shifts-frac", type=float, default=0.5,
                   help="per-node shifts span linspace(-a, a) with a = x*pi/(2n)")
    p.add_argument("--shifts-file", type=Path, help="file of n shift values, one per line")


def _add_output(p):
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", type=Path)
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the node permutation of the barycentric weights (runge)")


def _family_params(args) -> dict:
    params = {
        "theta0_frac": args.theta0_frac,
        "eta0_frac": args.eta0_frac,
        "beta_frac": args.beta_frac,
        "shifts_frac": args.shifts_frac,
    }
    if getattr(args, "shifts_file", None) is not None:
        params["shifts"] = np.loadtxt(args.shifts_file, dtype=float, ndmin=1)
    return params


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gruenwald", description="Gruenwald interpolation experiments"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nodes", help="emit a node grid")
    p.add_argument("--n", type=int, required=True)
    _add_family(p)
    _add_output(p)

    p = sub.add_parser("basis", help="sample one fundamental polynomial over [0, pi]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--grid", type=int, default=ex.DEFAULT_GRID)
    _add_family(p)
    _add_output(p)

    p = sub.add_parser("lebesgue", help="max of the Lebesgue-type sum")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--grid", type=int, default=ex.DEFAULT_GRID)
    p.add_argument("--profile", action="store_true", help="emit every theta instead of the max")
    _add_family(p)
    _add_output(p)

    p = sub.add_parser("bounds", help="bound sweep")
    p.add_argument("--check", required=True, choices=ex.BOUND_KINDS)
    p.add_argument("--n-list", type=parse_n_list, required=True)
    p.add_argument("--grid", type=int, default=ex.DEFAULT_GRID)
    p.add_argument("--theta0-frac", type=parse_float_list,
                   help="comma list of theta0 fractions of pi/(2n)")
    p.add_argument("--theta0-policy", choices=["zero", "fractions"], default="zero")
    p.add_argument("--kappa-frac", type=float, default=0.5)
    _add_output(p)

    p = sub.add_parser("converge", help="convergence table")
    p.add_argument("--function", required=True, choices=function_names())
    p.add_argument("--operator", default="gruenwald", choices=["lagrange", "gruenwald", "generalized"])
    p.add_argument("--n-list", type=parse_n_list, required=True)
    p.add_argument("--grid", type=int, default=ex.DEFAULT_GRID)
    _add_family(p)
    _add_output(p)

    p = sub.add_parser("voronovskaja", help="scaled pointwise errors")
    p.add_argument("--function", required=True, choices=function_names())
    p.add_argument("--theta-list", type=parse_float_list, required=True)
    p.add_argument("--n-list", type=parse_n_list, required=True)
    _add_family(p)
    _add_output(p)

    p = sub.add_parser("quantcheck", help="modulus-of-continuity error bound")
    p.add_argument("--function", required=True, choices=function_names())
    p.add_argument("--n-list", type=parse_n_list, required=True)
    p.add_argument("--grid", type=int, default=ex.DEFAULT_GRID)
    _add_family(p)
    _add_output(p)

    p = sub.add_parser("runge", help="equidistant Lagrange vs Chebyshev Gruenwald")
    p.add_argument("--n-list", type=parse_n_list, required=True)
    p.add_argument("--grid", type=int, default=ex.DEFAULT_GRID)
    _add_output(p)
    return parser


def _run(args):
    """Return ``(rows, violated)`` for the parsed command."""
    cmd = args.command
    if cmd == "nodes":
        grid = make_grid(args.family, args.n, **_family_params(args))
        rows = [
            {"k": k + 1, "angle": float(a), "cos_angle": float(math.cos(a))}
            for k, a in enumerate(grid.angles)
        ]
        return rows, False
    if cmd == "basis":
        grid = make_grid(args.family, args.n, **_family_params(args))
        theta = ex.theta_grid(args.grid)
        values, near = basis_column(grid, args.k, theta)
        rows = [
            {"theta": float(t), "value": float(v), "near_singular": bool(s)}
            for t, v, s in zip(theta, values, near)
        ]
        return rows, False
    if cmd == "lebesgue":
        grid = make_grid(args.family, args.n, **_family_params(args))
        theta = ex.theta_grid(args.grid)
        lam = lebesgue_like(grid, theta)
        if args.profile:
            return [{"theta": float(t), "lambda": float(v)} for t, v in zip(theta, lam)], False
        i = int(np.argmax(lam))
        row = {
            "n": grid.n,
            "theta0": grid.theta0,
            "max_lambda": float(lam[i]),
            "argmax_theta": float(theta[i]),
            "c2": c2_constant(),
        }
        return [row], False
    if cmd == "bounds":
        reports = ex.bound_sweep(
            args.check, args.n_list, args.grid, args.theta0_policy,
            fractions=args.theta0_frac, kappa_frac=args.kappa_frac,
        )
        rows = [dict(vars(r), passed=r.passed) for r in reports]
        return rows, not all(r.passed for r in reports)
    if cmd == "converge":
        table = ex.convergence_study(
            args.function, args.family, args.operator, args.n_list, args.grid,
            **_family_params(args),
        )
        rows = [
            {"function": table.function, "family": table.family, "operator": table.operator,
             **vars(r)}
            for r in table.rows
        ]
        return rows, False
    if cmd == "voronovskaja":
        rows = ex.voronovskaja_study(
            args.function, args.theta_list, args.n_list, args.family, **_family_params(args)
        )
        return rows, not all(r.passed for r in rows)
    if cmd == "quantcheck":
        rows = ex.quantitative_check(
            args.function, args.n_list, args.grid, args.family, **_family_params(args)
        )
        return rows, not all(r.passed for r in rows)
    if cmd == "runge":
        return ex.runge_contrast(args.n_list, args.grid, args.seed), False
    raise InvalidArgumentError(f"unknown command {cmd!r}")


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        rows, violated = _run(args)
        text = to_json(rows, ["gruenwald", *argv]) if args.format == "json" else to_csv(rows)
    except GruenwaldError as exc:
        print(f"gruenwald: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        print(f"gruenwald: internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.out is not None:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_VIOLATION if violated else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
