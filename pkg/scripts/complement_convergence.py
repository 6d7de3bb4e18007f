#!/usr/bin/env python3
"""Tabulate the measure of "the walker has left site 0 by time n".

Writes CSV (n, exact, decimal, deviation from 1, bound) to stdout. The
oscillation decays like 2^(1 - n/2); rows with n = 2 mod 4 sit at exactly
1 + 2^-n.
"""

import argparse
import csv
import sys

from qmwalk.qmeasure import complement_event, convergence_report, mu_complement_rowsum, mu_fast


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=64)
    ap.add_argument("--check-upto", type=int, default=16,
                    help="also evaluate the brute-force and row-sum routes up to this n")
    args = ap.parse_args()

    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["n", "mu", "decimal", "deviation", "bound", "routes_agree"])
    for row in convergence_report(args.max_n):
        agree = ""
        if row.n <= args.check_upto:
            agree = mu_fast(complement_event(row.n)) == mu_complement_rowsum(row.n) == row.mu
        w.writerow([row.n, row.mu, row.mu.to_decimal(), row.deviation.to_decimal(),
                    f"{row.bound:.6g}", agree])


if __name__ == "__main__":
    main()
