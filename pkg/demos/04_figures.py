"""Regenerate the Monte Carlo manipulation-rate tables.

Writes fig1.csv (rates vs voter count at m=15, k=14) and fig2.csv (rates
over an m x disapprovals grid at n=3).  The defaults use 20k samples per
cell so the script finishes in well under a minute; pass --samples 100000
to match the headline tables, or use the CLI directly:

    om-vote experiment fig1 --m 15 --k 14 --n 3:14 --samples 100000 --seed 42 --out fig1.csv
    om-vote experiment fig2 --n 3 --m 21:30 --samples 100000 --seed 42 --out fig2.csv
"""

import argparse

from omvote import heatmap, rows_to_csv, sweep_n
from omvote.experiments import write_csv_file

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--samples", type=int, default=20_000)
parser.add_argument("--seed", type=int, default=42)
args = parser.parse_args()

print(f"sweeping n=3..14 at m=15, k=14 ({args.samples} samples per cell)...")
fig1 = sweep_n(15, 14, range(3, 15), args.samples, args.seed)
write_csv_file("fig1.csv", fig1)
for row in fig1:
    bar = "#" * round(40 * row.p_wom)
    print(f"  n={row.n:2d}  p_wom={row.p_wom:.3f} {bar}")

print(f"\nsweeping m=21..30, disapprovals 1..9 at n=3...")
fig2 = heatmap(3, range(21, 31), args.samples, args.seed)
write_csv_file("fig2.csv", fig2)
cells = {(r.m, r.m - r.k): r.p_om for r in fig2}
header = "m-k\\m " + " ".join(f"{m:5d}" for m in range(21, 31))
print(" " + header)
for mk in range(1, 10):
    row = " ".join(f"{cells[(m, mk)]:5.2f}" for m in range(21, 31))
    print(f"  {mk:4d} {row}")

print("\nwrote fig1.csv and fig2.csv")
print(rows_to_csv(fig1[:2]))
