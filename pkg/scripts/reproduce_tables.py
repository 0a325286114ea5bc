"""Rank tri-rings and generalized thetas for the reference parameter rows.

Writes one CSV per row into the output directory (default: ./tables).
"""

import argparse
import pathlib

from alphaspectra.extremal import rank_inf, rank_theta

INF_ROWS = [(0.5, 15), (0.5, 24), (0.2, 15), (0.8, 15)]
THETA_ROWS = [0.6, 0.2]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="tables")
    ap.add_argument("--top", type=int, default=4)
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for alpha, m in INF_ROWS:
        ranked = rank_inf(m, alpha, top=args.top, restrict_middle=True)
        path = out / f"inf_m{m}_a{alpha}.csv"
        path.write_text(ranked.to_csv())
        print(f"INF m={m} alpha={alpha} ({ranked.count} members)")
        for spec, rho in ranked.entries:
            print(f"  {str(spec):<14} {rho:.6f}")
    for alpha in THETA_ROWS:
        ranked = rank_theta(18, 4, 3, alpha, top=args.top)
        path = out / f"theta_m18_s4_t3_a{alpha}.csv"
        path.write_text(ranked.to_csv())
        print(f"Theta s=4 t=3 m=18 alpha={alpha} ({ranked.count} members)")
        for spec, rho in ranked.entries:
            print(f"  {str(spec):<22} {rho:.6f}")


if __name__ == "__main__":
    main()
