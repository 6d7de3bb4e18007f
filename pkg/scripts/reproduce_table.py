#!/usr/bin/env python3
"""Print the s, t, u, v table next to the binomial sums and path counts it equals."""

import argparse

from qmwalk.combinatorics import quad_by_binomials, quad_closed_form, quad_table
from qmwalk.pathspace import class_counts, z_vector


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=15)
    args = ap.parse_args()

    rec = quad_table(args.max_n)
    print(f"{'n':>3} {'s':>8} {'t':>8} {'u':>8} {'v':>8}  {'2^(n-2)':>8}  agree")
    for n in range(1, args.max_n + 1):
        q = quad_closed_form(n)
        routes = [rec[n - 1].as_tuple(), quad_by_binomials(n).as_tuple()]
        if n <= 16:
            routes.append(class_counts(z_vector(n)).counts)
        agree = all(r == q.as_tuple() for r in routes)
        print(f"{n:>3} {q.s:>8} {q.t:>8} {q.u:>8} {q.v:>8}  {str(q.quarter_power.to_fraction()):>8}  {agree}")


if __name__ == "__main__":
    main()
