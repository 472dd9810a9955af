"""Write kappa(Im h) curves for extremal and beta-sectorial operators as CSV.

One file per curve, plus ``markers.csv`` listing the bound kappa0, its
minimiser H*, and the two values h(-), h(+) sharing a chosen kappa.

    python3 scripts/figure_curves.py --out curves --nu 1.5 --kappa 0.5 --beta 0.5 --beta 1.0
"""

import argparse
import csv
import math
from pathlib import Path

from centropy.analysis import curve
from centropy.classify import extremal_h_from_kappa, kappa0_extremal, kappa0_sectorial, sectorial_h_from_kappa
from centropy.weyl import bessel_model


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="curves")
    ap.add_argument("--nu", type=float, default=0.5)
    ap.add_argument("--kappa", type=float, default=0.5, help="level at which the two h values are marked")
    ap.add_argument("--beta", type=float, action="append", help="sectorial angle(s), radians")
    ap.add_argument("--h-im-max", type=float, default=6.0)
    ap.add_argument("--samples", type=int, default=400)
    args = ap.parse_args(argv)

    model = bessel_model(args.nu)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    betas = args.beta or [math.pi / 6, math.pi / 3]
    rows = []

    data = curve(model, 1e-3, args.h_im_max, args.samples)
    (out / "extremal.csv").write_text(data.to_csv())
    hs = extremal_h_from_kappa(model, args.kappa) if args.kappa >= kappa0_extremal(model) else []
    rows.append(["extremal", "", kappa0_extremal(model), data.h_star] + [h.imag for h in hs])

    for beta in betas:
        data = curve(model, 1e-3, args.h_im_max, args.samples, beta)
        (out / f"sectorial_beta_{beta:.4f}.csv").write_text(data.to_csv())
        k0 = kappa0_sectorial(model, beta)
        hs = sectorial_h_from_kappa(model, beta, args.kappa) if args.kappa >= k0 else []
        rows.append(["sectorial", beta, k0, data.h_star] + [h.imag for h in hs])

    with open(out / "markers.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["curve", "beta", "kappa0", "h_star", "im_h_minus", "im_h_plus"])
        w.writerows(row + [""] * (6 - len(row)) for row in rows)
    print(f"wrote {len(rows)} curves to {out}/")


if __name__ == "__main__":
    main()
