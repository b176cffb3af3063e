#!/usr/bin/env python3
"""Tabulate the 1/N phase-uncertainty scaling against the 1/sqrt(N) reference."""
import argparse
import math
from pathlib import Path

from spincat import scaling_table
from spincat.metrology import write_scaling_csv


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-list", default="1,2,4,8,16,32,64")
    ap.add_argument("--out", default="results/metrology_scaling.csv")
    args = ap.parse_args()

    rows = scaling_table([int(tok) for tok in args.n_list.split(",")])
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", newline="") as fh:
        write_scaling_csv(rows, fh)

    print(f"{'N':>4} {'delta_phi':>12} {'1/sqrt(N)':>12} {'gain':>8} {'qfi':>10}")
    for r in rows:
        gain = r.delta_phi_sql_reference / r.delta_phi_noon
        print(
            f"{r.n_total:>4} {r.delta_phi_noon:>12.6f} "
            f"{r.delta_phi_sql_reference:>12.6f} {gain:>8.3f} {r.qfi:>10.1f}"
        )
    assert all(abs(r.delta_phi_noon * r.n_total - 1) < 1e-9 for r in rows)
    assert all(abs(gain - math.sqrt(r.n_total)) < 1e-6 for r in rows for gain in [r.delta_phi_sql_reference / r.delta_phi_noon])
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
