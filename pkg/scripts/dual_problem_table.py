"""Tabulate the solutions of both dual c-entropy problems in every regime.

    python3 scripts/dual_problem_table.py --nu 1.5 --entropy 0.5 --dissipation 0.3 --beta 0.8
"""

import argparse
import math

from centropy import entropy as ent
from centropy.errors import LSystemError
from centropy.weyl import bessel_model


def describe(mu):
    return "inf" if mu == math.inf else f"{mu:.10f}"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nu", type=float, default=0.5)
    ap.add_argument("--numerical", action="store_true")
    ap.add_argument("--entropy", type=float, default=0.5)
    ap.add_argument("--dissipation", type=float, default=0.3)
    ap.add_argument("--beta", type=float, default=math.pi / 4)
    args = ap.parse_args(argv)

    model = bessel_model(args.nu, numerical=args.numerical)
    S, D, b = args.entropy, args.dissipation, args.beta
    jobs = [
        ("min dissipation", "M_kappa", lambda: ent.min_dissipation_Mk(model, S)),
        ("min dissipation", "M_kappa^-1", lambda: ent.min_dissipation_Mk_inv(model, S)),
        ("min dissipation", "extremal", lambda: ent.min_dissipation_extremal(model, S)),
        ("min dissipation", f"sectorial b={b:.4f}", lambda: ent.min_dissipation_sectorial(model, b, S)),
        ("max entropy", "M_kappa", lambda: ent.max_entropy_Mk(model, D)),
        ("max entropy", "M_kappa^-1", lambda: ent.max_entropy_Mk_inv(model, D)),
        ("max entropy", "extremal", lambda: ent.max_entropy_extremal(model)),
        ("max entropy", f"sectorial b={b:.4f}", lambda: ent.max_entropy_sectorial(model, b)),
        ("max entropy", "accretive", lambda: ent.max_entropy_accretive(model)),
    ]
    print(f"model {model.describe()}  S={S}  D={D}")
    print(f"{'problem':<16}{'regime':<22}{'Re h':>15}{'Im h':>15}{'mu':>16}{'entropy':>15}  unique  verified")
    for problem, regime, job in jobs:
        try:
            sol = job()
        except LSystemError as exc:
            print(f"{problem:<16}{regime:<22}  {exc.kind}: {exc}")
            continue
        mu = "any" if sol.any_mu else describe(sol.mu)
        ok = ent.verify_solution(sol)["ok"]
        print(f"{problem:<16}{regime:<22}{sol.h.real:>15.10f}{sol.h.imag:>15.10f}{mu:>16}{sol.entropy:>15.10f}"
              f"  {str(sol.unique):<6}  {ok}")


if __name__ == "__main__":
    main()
