#!/usr/bin/env python3
"""Print the N_n(t) list, the n=4 symmetric-difference tables, and the N_n(1) vs S(n) table."""

import argparse

from emdpoly import (
    RectBound,
    enumerate_partitions,
    eval_at_one,
    la_haye_S,
    n_poly_recursive,
    sym_diff_size,
)


def diagram(lam):
    return "0" if not lam else "(" + ",".join(map(str, lam)) + ")"


def print_distance_table(a, b):
    parts = enumerate_partitions(RectBound(a, b))
    width = max(len(diagram(p)) for p in parts) + 1
    print(f"Par({a}x{b})")
    print(" " * width + "".join(diagram(p).rjust(width) for p in parts))
    total = 0
    for lam in parts:
        row = [sym_diff_size(lam, mu) for mu in parts]
        total += sum(row)
        print(diagram(lam).rjust(width) + "".join(str(x).rjust(width) for x in row))
    print(f"sum = {total}\n")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    args = ap.parse_args()

    for n in range(1, args.max_n + 1):
        print(f"N_{n}(t) = {n_poly_recursive(n, n)}")
    print()
    for k in range(1, 4):
        print_distance_table(k, 4 - k)
    print(f"{'n':>3} {'N_n(1)':>12} {'S(n)':>12}")
    for n in range(args.max_n + 1):
        value = eval_at_one(n_poly_recursive(n, n)) if n else 0
        print(f"{n:>3} {value:>12} {la_haye_S(n):>12}")


if __name__ == "__main__":
    main()
