"""Distributions of the IR index and of the m-index over S_n."""

import argparse
import json

from ukperm.determinacy import ir_distribution
from ukperm.posets import m_distribution


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--k", type=int, nargs="+", default=[2, 3, 4])
    args = ap.parse_args()
    for n in range(1, args.max_n + 1):
        ir = ir_distribution(n)
        print(json.dumps({"n": n, "ir": {str(a): b for a, b in sorted(ir.items())}}))
        for k in args.k:
            if k <= n:
                m = m_distribution(n, k)
                print(json.dumps({"n": n, "k": k, "m": {str(a): b for a, b in sorted(m.items())}}))


if __name__ == "__main__":
    main()
