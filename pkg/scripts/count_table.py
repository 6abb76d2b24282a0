"""Print A_{k,n} for a grid of k and n, computed by the Hamiltonian-path DP."""

import argparse
import csv
import sys

from ukperm.counting import count_bruteforce


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, nargs=2, default=(2, 8), metavar=("LO", "HI"))
    ap.add_argument("--n", type=int, nargs=2, default=(1, 12), metavar=("LO", "HI"))
    args = ap.parse_args()
    ns = range(args.n[0], args.n[1] + 1)
    out = csv.writer(sys.stdout)
    out.writerow(["k"] + [f"n={n}" for n in ns])
    for k in range(args.k[0], args.k[1] + 1):
        out.writerow([k] + [count_bruteforce(k, n) for n in ns])


if __name__ == "__main__":
    main()
