#!/usr/bin/env python3
"""Plot a degjc CSV: one line per series, x and y picked by column name.

    degjc concurrence-sweep --out sweep.csv
    tools/plot_csv.py sweep.csv --y concurrence_closed --out sweep.png

Series are split on the text columns (field, ...) and on beta and nbar.
Needs matplotlib, which the C++ build does not use.
"""

import argparse
import csv
import sys
from collections import defaultdict


def read_table(path):
    with open(path, newline="") as f:
        lines = [line for line in f if not line.startswith("#")]
    return list(csv.DictReader(lines))


def _numeric_column(rows, key):
    try:
        {float(r[key]) for r in rows}
        return True
    except ValueError:
        return False


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("csv")
    ap.add_argument("--x", default="omega_t")
    ap.add_argument("--y", required=True)
    ap.add_argument("--out", help="image file; shows a window when omitted")
    args = ap.parse_args()

    rows = read_table(args.csv)
    if not rows:
        sys.exit("no data rows")
    for col in (args.x, args.y):
        if col not in rows[0]:
            sys.exit(f"no column '{col}'; have {', '.join(rows[0])}")

    keys = [k for k in rows[0] if k not in (args.x, args.y) and not _numeric_column(rows, k)]
    keys += [k for k in ("beta", "nbar") if k in rows[0] and k not in (args.x, args.y)]
    series = defaultdict(lambda: ([], []))
    for r in rows:
        xs, ys = series[" ".join(f"{k}={r[k]}" for k in keys)]
        xs.append(float(r[args.x]))
        ys.append(float(r[args.y]))

    import matplotlib
    if args.out:
        matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots()
    for label, (xs, ys) in series.items():
        ax.plot(xs, ys, label=label or args.y)
    ax.set_xlabel(args.x)
    ax.set_ylabel(args.y)
    ax.legend(fontsize="small")
    if args.out:
        fig.savefig(args.out, dpi=150)
    else:
        plt.show()


if __name__ == "__main__":
    main()
