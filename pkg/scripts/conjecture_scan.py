"""Gap between rho(ThHat(n)) and rho(Th(3,1;n-3)) for 1/2 < alpha < 1.

The CSV is numerical evidence only; a boundary row just above alpha = 1/2 is
included for every n.
"""

import argparse
import sys

from alphaspectra.extremal import SCAN_ALPHAS, conjecture_scan


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-min", type=int, default=5)
    ap.add_argument("--n-max", type=int, default=40)
    ap.add_argument("--alphas", default=",".join(str(a) for a in SCAN_ALPHAS))
    ap.add_argument("--out", default="-", help="CSV path, '-' for stdout")
    args = ap.parse_args()
    rep = conjecture_scan(range(args.n_min, args.n_max + 1), [float(a) for a in args.alphas.split(",")])
    text = rep.to_csv()
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    neg = [r for r in rep.rows if r["gap"] < 0]
    print(f"{rep.label}: {len(rep.rows)} rows, {len(neg)} negative gaps, "
          f"boundary consistent: {rep.boundary_consistent()}", file=sys.stderr)
    return 0 if rep.boundary_consistent() else 1


if __name__ == "__main__":
    sys.exit(main())
