"""Check whether every walk in the full overlap graph P_k is realized by some permutation.

For each k and n the script walks P_k with n-k arcs, counts the linear
extensions of each walk's position poset, and reports walks with none.
It also confirms that the realized class sizes add up to n!.
"""

import argparse
import json
from math import factorial

from ukperm.overlap import build_overlap_graph, enumerate_paths
from ukperm.posets import count_linear_extensions, position_poset


def survey(k: int, n: int) -> dict:
    g = build_overlap_graph(k)
    walks = total = 0
    unrealizable = []
    for path in enumerate_paths(g, n - k):
        walks += 1
        w = position_poset(path, k)
        size = 0 if w is None else count_linear_extensions(w)
        total += size
        if size == 0:
            unrealizable.append(["".join(map(str, p)) for p in path])
    return {
        "k": k,
        "n": n,
        "walks": walks,
        "unrealizable": len(unrealizable),
        "examples": unrealizable[:5],
        "sum_of_class_sizes": total,
        "equals_n_factorial": total == factorial(n),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=4)
    ap.add_argument("--max-n", type=int, default=9)
    args = ap.parse_args()
    for k in range(2, args.max_k + 1):
        for n in range(k, args.max_n + 1):
            print(json.dumps(survey(k, n)), flush=True)


if __name__ == "__main__":
    main()
