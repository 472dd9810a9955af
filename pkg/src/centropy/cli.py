"""Command-line front end: analyze, solve, curve, verify-examples.

Reports go to stdout as JSON (curves as CSV). Library errors are printed as a
JSON object ``{"error": kind, "message": ...}`` with exit status 2.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import List, Optional

from . import entropy as ent
from .analysis import analyze, curve, to_jsonable
from .errors import InfiniteEntropyError, LSystemError
from .lsystem import INF
from .verify import GROUPS, run_checks
from .weyl import PinnedModel, Potential, NumericalWeyl, bessel_model

# The CLI reads decimal text, so D = -Im m(i) is recognised within this
# relative band (the library default is much tighter).
CLI_BOUNDARY_BAND = 1e-8


class UsageError(LSystemError):
    kind = "usage"


def _add_model_flags(p: argparse.ArgumentParser):
    g = p.add_argument_group("model")
    g.add_argument("--model", choices=("bessel", "table", "pinned"), default="bessel")
    g.add_argument("--nu", type=float, default=0.5, help="Bessel order (closed form for 0.5 and 1.5)")
    g.add_argument("--ell", type=float, default=1.0, help="left endpoint")
    g.add_argument("--numerical", action="store_true", help="use the ODE solver even when a closed form exists")
    g.add_argument("--potential-file", help="two-column 'x q(x)' table (implies --model table)")
    g.add_argument("--m-re", type=float, help="Re m(i) for --model pinned")
    g.add_argument("--m-im", type=float, help="Im m(i) for --model pinned")
    g.add_argument("--m0", type=float, help="m(-0) for --model pinned")


def build_model(args):
    if args.potential_file or args.model == "table":
        if not args.potential_file:
            raise UsageError("--model table needs --potential-file")
        return NumericalWeyl(Potential.load(args.potential_file))
    if args.model == "pinned":
        if None in (args.m_re, args.m_im, args.m0):
            raise UsageError("--model pinned needs --m-re, --m-im and --m0")
        return PinnedModel(complex(args.m_re, args.m_im), args.m0)
    return bessel_model(args.nu, args.ell, numerical=args.numerical)


def _emit(obj):
    print(json.dumps(to_jsonable(obj), indent=2, allow_nan=False))


def solution_dict(sol: ent.DualProblemSolution, problem: str) -> dict:
    return {
        "problem": problem,
        "regime": sol.regime,
        "h": sol.h,
        "mu": "any" if sol.any_mu else sol.mu,
        "witness_mu": sol.mu,
        "any_mu": sol.any_mu,
        "unique": sol.unique,
        "beta": sol.beta,
        "entropy": sol.entropy,
        "dissipation": sol.dissipation,
        "larger_root": sol.larger_root,
        "companions": sol.companions,
        "model": sol.model.describe(),
        "verification": ent.verify_solution(sol),
    }


# --- subcommands ----------------------------------------------------------------


def cmd_analyze(args) -> int:
    model = build_model(args)
    mu = INF if args.mu_inf else args.mu
    _emit(analyze(model, complex(args.h_re, args.h_im), mu))
    return 0


def cmd_solve(args) -> int:
    model = build_model(args)
    problem, regime = args.problem, args.regime
    if regime == "sectorial" and args.beta is None:
        raise UsageError("--regime sectorial needs --beta")
    if regime != "sectorial" and args.beta is not None:
        raise UsageError("--beta only applies to --regime sectorial")
    if problem == "min-dissipation":
        if args.entropy is None or args.dissipation is not None:
            raise UsageError("min-dissipation takes --entropy (and no --dissipation)")
        if regime == "accretive":
            raise UsageError("the accretive regime is only defined for max-entropy")
        fn = {"mk": ent.min_dissipation_Mk, "mk-inv": ent.min_dissipation_Mk_inv,
              "extremal": ent.min_dissipation_extremal}.get(regime)
        sol = fn(model, args.entropy) if fn else ent.min_dissipation_sectorial(model, args.beta, args.entropy)
    else:
        if args.entropy is not None:
            raise UsageError("max-entropy does not take --entropy")
        if regime in ("mk", "mk-inv"):
            if args.dissipation is None:
                raise UsageError(f"max-entropy in regime {regime} needs --dissipation")
            fn = ent.max_entropy_Mk if regime == "mk" else ent.max_entropy_Mk_inv
            sol = fn(model, args.dissipation, band=args.boundary_band)
        else:
            if args.dissipation is not None:
                raise UsageError(f"max-entropy in regime {regime} does not take --dissipation")
            if regime == "extremal":
                sol = ent.max_entropy_extremal(model)
            elif regime == "accretive":
                sol = ent.max_entropy_accretive(model)
            else:
                sol = ent.max_entropy_sectorial(model, args.beta)
    _emit(solution_dict(sol, problem))
    return 0


def cmd_curve(args) -> int:
    model = build_model(args)
    if args.regime == "sectorial" and args.beta is None:
        raise UsageError("--regime sectorial needs --beta")
    beta = args.beta if args.regime == "sectorial" else None
    data = curve(model, args.h_im_min, args.h_im_max, args.samples, beta)
    sys.stdout.write(data.to_csv())
    return 0


def cmd_verify(args) -> int:
    only = None
    if args.only:
        only = [g for item in args.only for g in item.split(",") if g]
    try:
        checks = run_checks(only=only, corrected=args.corrected, perturb=args.perturb)
    except ValueError as exc:
        raise UsageError(str(exc))
    failed = [c for c in checks if not c.passed]
    if args.json:
        _emit({"checks": [{"group": c.group, "name": c.name, "expected": _val(c.expected),
                           "actual": _val(c.actual), "residual": c.residual, "tol": c.tol,
                           "passed": c.passed, "error": c.error} for c in checks],
               "passed": len(checks) - len(failed), "failed": len(failed)})
    else:
        for c in checks:
            status = "PASS" if c.passed else "FAIL"
            extra = f"  ({c.error})" if c.error else ""
            print(f"{status}  {c.group:<20} {c.name:<34} residual={c.residual:.3e} tol={c.tol:.0e}{extra}")
        print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
        if failed:
            print("failed: " + ", ".join(f"{c.group}:{c.name}" for c in failed))
    return 1 if failed else 0


def _val(v):
    if isinstance(v, (bool, str)) or v is None:
        return v
    if isinstance(v, complex):
        return v
    return float(v)


# --- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="centropy", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one system")
    _add_model_flags(p)
    p.add_argument("--h-re", type=float, required=True)
    p.add_argument("--h-im", type=float, required=True)
    mu = p.add_mutually_exclusive_group(required=True)
    mu.add_argument("--mu", type=float)
    mu.add_argument("--mu-inf", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("solve", help="solve a dual c-entropy problem")
    _add_model_flags(p)
    p.add_argument("--problem", choices=("min-dissipation", "max-entropy"), required=True)
    p.add_argument("--regime", choices=("mk", "mk-inv", "extremal", "sectorial", "accretive"), required=True)
    p.add_argument("--beta", type=float)
    p.add_argument("--entropy", type=float)
    p.add_argument("--dissipation", type=float)
    p.add_argument("--boundary-band", type=float, default=CLI_BOUNDARY_BAND,
                   help="relative band around D = -Im m(i) treated as infinite entropy")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("curve", help="kappa as a function of Im h (CSV)")
    _add_model_flags(p)
    p.add_argument("--regime", choices=("extremal", "sectorial"), required=True)
    p.add_argument("--beta", type=float)
    p.add_argument("--h-im-min", type=float, required=True)
    p.add_argument("--h-im-max", type=float, required=True)
    p.add_argument("--samples", type=int, default=100)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("verify-examples", help="golden checks for the worked examples")
    p.add_argument("--only", action="append", help=f"group(s) to run: {', '.join(GROUPS)}")
    p.add_argument("--corrected", action="store_true",
                   help="compare the nu=3/2 example with values for the exact closed form")
    p.add_argument("--perturb", type=float, default=0.0, help="shift m(i) of every model (negative control)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def _error_payload(exc: LSystemError) -> dict:
    payload = exc.to_dict()
    if isinstance(exc, InfiniteEntropyError) and exc.construction is not None:
        payload["construction"] = {"h": exc.construction.h, "mu": "any", "entropy": math.inf,
                                   "dissipation": exc.construction.dissipation}
    return payload


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LSystemError as exc:
        _emit(_error_payload(exc))
        return 2
    except OSError as exc:
        _emit({"error": "io", "message": str(exc)})
        return 2


if __name__ == "__main__":
    sys.exit(main())
