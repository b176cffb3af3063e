#!/usr/bin/env python3
"""Scan the two-component fidelity of the quarter-period state over j.

Integer rows sit at fidelity 1; half-integer rows record how far the state
lands from the span of the two phase-opposed coherent states (it halves
with every half-integer step at omega = 0, gamma = i).
"""
import argparse
from pathlib import Path

from spincat import HalfInteger, cat_scan
from spincat.cli import parse_complex
from spincat.dynamics import write_cat_scan_csv


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--twice-j-list", default="1,2,3,4,5,6,7,8,9,10")
    ap.add_argument("--omega-list", default="0")
    ap.add_argument("--gamma", type=parse_complex, default=1j)
    ap.add_argument("--out", default="results/cat_scan.csv")
    args = ap.parse_args()

    j_list = [HalfInteger(int(tok)) for tok in args.twice_j_list.split(",")]
    omega_list = [float(tok) for tok in args.omega_list.split(",")]
    rows = cat_scan(j_list, omega_list, gamma=args.gamma)

    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", newline="") as fh:
        write_cat_scan_csv(rows, fh)

    print(f"{'2j':>4} {'omega':>8} {'fidelity':>12}")
    for r in rows:
        print(f"{r.twice_j:>4} {r.omega:>8.3f} {r.fidelity:>12.9f}")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
