"""Fit rational generating functions to A_{k,n} for small k and extrapolate.

The fit uses the first ``--terms`` values; the next ``--check`` values are
computed independently and compared with the fitted expansion.
"""

import argparse
import json

from ukperm.counting import fit_rational_gf, series
from ukperm.errors import FitFailure


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--terms", type=int, default=60)
    ap.add_argument("--check", type=int, default=10)
    args = ap.parse_args()
    bound = (args.terms - 2) // 2
    for k in args.k:
        table = series(k, args.terms + args.check - 1, crosscheck_n=16)
        fit_terms = table.counts[: args.terms]
        try:
            gf = fit_rational_gf(fit_terms, bound)
        except FitFailure as exc:
            print(json.dumps({"k": k, "fit": None, "reason": str(exc)}))
            continue
        predicted = gf.coefficients(len(table.counts))[args.terms:]
        print(json.dumps({
            "k": k,
            "order": len(gf.denominator) - 1,
            "numerator": gf.numerator,
            "denominator": gf.denominator,
            "extrapolation_ok": predicted == list(table.counts[args.terms:]),
        }))


if __name__ == "__main__":
    main()
