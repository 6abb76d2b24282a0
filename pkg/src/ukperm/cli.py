"""Command-line interface.

Every subcommand writes one document to stdout in the chosen --format.
JSON output is an envelope {"schema", "command", "parameters", "method",
"result"}; big integers are rendered as decimal strings.  CSV schemas:

  series     n,count,method
  ir-dist    ir,count
  m-dist     m,count
  prohibitions  length,pattern
  (others)   key,value

Exit status: 0 ok, 2 invalid input, 3 budget exceeded, 4 engines disagree.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import factorial

from . import config
from .config import DEFAULT
from .counting import (
    ARC,
    NODE,
    build_transfer_graph,
    count_bruteforce,
    count_via_transfer,
    fit_rational_gf,
    gf_reference_k3,
    series,
)
from .determinacy import (
    WindowPath,
    ir_distribution,
    ir_histogram_from_counts,
    ir_index,
    is_uniquely_determined,
    is_uniquely_determined_via_inverse,
    window_path,
)
from .errors import ConsistencyError, FitFailure, InvalidInput, ResourceLimit
from .overlap import build_overlap_graph, export_dot, realize_path, stats
from .perm import format_perm, parse_perm
from .posets import (
    count_linear_extensions,
    incomparable_pairs,
    m_distribution,
    poset_from_permutation,
)
from .prohibitions import contains_prohibition, find_crucial, generate_prohibitions

SCHEMA = "1"


class Report:
    def __init__(self, result, method: str = "brute", table=None, header=None, text: str | None = None):
        self.result = result
        self.method = method
        self.table = table
        self.header = header
        self.text = text  # raw payload (DOT) that bypasses formatting


def _fmt(p, style: str) -> str:
    return format_perm(p, style if style == "comma" else "auto")


# --- subcommands -------------------------------------------------------------

def cmd_check(args) -> Report:
    p, style = parse_perm(args.perm)
    ukd = is_uniquely_determined(p, args.k)
    if ukd != is_uniquely_determined_via_inverse(p, args.k):
        raise ConsistencyError("distance and Hamiltonian criteria disagree")
    result = {"perm": _fmt(p, style), "k": args.k, "ukd": ukd, "ir": ir_index(p)}
    witness = contains_prohibition(p, args.k)
    if witness is not None:
        result["witness"] = witness.to_json()
    return Report(result)


def cmd_path(args) -> Report:
    p, style = parse_perm(args.perm)
    path = window_path(p, args.k)
    return Report({"perm": _fmt(p, style), "k": args.k, "arcs": path.arc_count,
                   "nodes": [_fmt(v, style) for v in path.nodes]})


def _limit_n(args) -> int | None:
    return getattr(args, "budget_n", None)


def cmd_count(args) -> Report:
    k, n, method = args.k, args.n, args.method
    values = {}
    if method in ("hamiltonian", "all", "auto"):
        values["hamiltonian"] = count_bruteforce(k, n, _limit_n(args))
    for name, variant in (("transfer", NODE), ("arc", ARC)):
        wanted = method in (name, "all") or (method == "auto" and name == "transfer")
        if not wanted or k < 2:
            continue
        try:
            _check_transfer_budget(args, k, variant)
            values[name] = count_via_transfer(k, n, variant)
        except ResourceLimit:
            if method != "auto":
                raise
    if len(set(values.values())) > 1:
        raise ConsistencyError(f"engines disagree: {values}")
    count = next(iter(values.values()))
    return Report({"k": k, "n": n, "count": str(count), "engines": sorted(values)},
                  method="+".join(sorted(values)))


def _check_transfer_budget(args, k: int, variant: str) -> None:
    limit = DEFAULT.node_transfer_k if variant == NODE else DEFAULT.arc_transfer_k
    config.check("k", k, limit)
    if args.budget_nodes is not None:
        m = 2 * k - 1 if variant == NODE else 2 * k - 2
        config.check("graph nodes (m!)", factorial(m), args.budget_nodes)


def cmd_series(args) -> Report:
    variant = args.variant
    if variant is not None:
        _check_transfer_budget(args, args.k, variant)
    table = series(args.k, args.max_n, crosscheck_n=args.crosscheck_n, variant=variant)
    rows = [[n, c, m] for n, (c, m) in enumerate(zip(table.counts, table.methods))]
    method = "hamiltonian+transfer" if "transfer" in table.methods else "hamiltonian"
    return Report(table.to_json(), method=method, table=rows, header=["n", "count", "method"])


def cmd_gf(args) -> Report:
    bound = args.degree_bound
    terms = args.terms if args.terms is not None else 2 * bound + 2
    table = series(args.k, terms - 1, crosscheck_n=args.crosscheck_n)
    gf = fit_rational_gf(table, bound)
    result = {"k": args.k, "terms": terms, "degree_bound": bound, **gf.to_json()}
    if args.k == 3:
        result["matches_reference_k3"] = gf == gf_reference_k3().reduced()
    return Report(result, method="transfer")


def cmd_prohibitions(args) -> Report:
    pset = generate_prohibitions(args.k, args.max_length)
    result = pset.to_json()
    result["longest"] = pset.longest
    result["attains_2k_minus_1"] = pset.longest >= 2 * args.k - 1
    rows = [[len(p), format_perm(p)] for p in pset.patterns]
    return Report(result, table=rows, header=["length", "pattern"])


def cmd_graph(args) -> Report:
    if args.pruned:
        variant = args.variant or ARC
        _check_transfer_budget(args, args.k, variant)
        g = build_transfer_graph(args.k, variant)
    else:
        m = args.k
        if args.budget_nodes is not None:
            config.check("graph nodes (m!)", factorial(m), args.budget_nodes)
        g = build_overlap_graph(m)
    if args.dot:
        return Report(None, text=export_dot(g, labels=args.labels))
    result = {"k": args.k, "pruned": args.pruned, **stats(g)}
    if args.pruned:
        result["variant"] = args.variant or ARC
    return Report(result, method="transfer" if args.pruned else "brute")


def cmd_poset(args) -> Report:
    p, style = parse_perm(args.perm)
    w = poset_from_permutation(p, args.k)
    if args.dot:
        return Report(None, text=w.to_dot())
    result = {"perm": _fmt(p, style), "k": args.k, **w.to_json(),
              "linear_extensions": str(count_linear_extensions(w))}
    return Report(result)


def cmd_classify(args) -> Report:
    p, style = parse_perm(args.perm)
    w = poset_from_permutation(p, args.k)
    m = count_linear_extensions(w)
    members = realize_path(window_path(p, args.k))
    if len(members) != m:
        raise ConsistencyError(f"poset gives m={m} but path realization gives {len(members)}")
    result = {"perm": _fmt(p, style), "k": args.k, "m": str(m), "ukd": m == 1,
              "incomparable_pairs": len(incomparable_pairs(w)),
              "class": [_fmt(q, style) for q in sorted(members)]}
    return Report(result)


def cmd_realize(args) -> Report:
    nodes = [parse_perm(t)[0] for t in args.nodes]
    style = parse_perm(args.nodes[0])[1]
    if len({len(v) for v in nodes}) != 1:
        raise InvalidInput("all path nodes must have the same length")
    path = WindowPath(len(nodes[0]), tuple(nodes))
    members = sorted(realize_path(path))
    return Report({"k": path.k, "n": path.n, "realizable": bool(members), "count": len(members),
                   "permutations": [_fmt(q, style) for q in members]})


def cmd_crucial(args) -> Report:
    found = None
    for n in range(0, args.max_n + 1):
        found = find_crucial(args.k, n, _limit_n(args))
        if found is not None:
            break
    result = {"k": args.k, "max_n": args.max_n,
              "crucial": None if found is None else format_perm(found),
              "status": "none found" if found is None else "found"}
    return Report(result, method="hamiltonian")


def cmd_irdist(args) -> Report:
    hist = ir_distribution(args.n, _limit_n(args))
    cumulative = {k: count_bruteforce(k, args.n) for k in range(1, max(args.n, 1) + 1)}
    if args.n >= 1 and ir_histogram_from_counts(args.n, cumulative) != hist:
        raise ConsistencyError("IR histogram disagrees with cumulative counts A_{k,n}")
    rows = [[ir, c] for ir, c in sorted(hist.items())]
    return Report({"n": args.n, "histogram": {str(k): str(v) for k, v in sorted(hist.items())}},
                  method="brute+hamiltonian", table=rows, header=["ir", "count"])


def cmd_mdist(args) -> Report:
    dist = m_distribution(args.n, args.k, _limit_n(args))
    rows = [[m, c] for m, c in dist.items()]
    return Report({"n": args.n, "k": args.k, "distribution": {str(m): str(c) for m, c in dist.items()}},
                  table=rows, header=["m", "count"])


# --- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ukperm", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        sp.add_argument("--format", choices=("json", "csv", "plain"), default="json")
        sp.add_argument("--budget-n", type=int, default=None,
                        help="override the exhaustive / Hamiltonian size budget")
        sp.add_argument("--budget-nodes", type=int, default=None,
                        help="refuse graphs whose node universe m! exceeds this")
        return sp

    sp = add("check", cmd_check, "decide unique k-determinability")
    sp.add_argument("perm")
    sp.add_argument("--k", type=int, required=True)

    sp = add("path", cmd_path, "window path of a permutation")
    sp.add_argument("perm")
    sp.add_argument("--k", type=int, required=True)

    sp = add("count", cmd_count, "A_{k,n}")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--method", choices=("auto", "hamiltonian", "transfer", "arc", "all"), default="auto")

    sp = add("series", cmd_series, "A_{k,0..max-n}")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--variant", choices=(NODE, ARC), default=None)
    sp.add_argument("--crosscheck-n", type=int, default=20)

    sp = add("gf", cmd_gf, "fit the rational generating function A_k(x)")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--degree-bound", type=int, default=12)
    sp.add_argument("--terms", type=int, default=None)
    sp.add_argument("--crosscheck-n", type=int, default=20)

    sp = add("prohibitions", cmd_prohibitions, "irreducible prohibitions L_k")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--max-length", type=int, default=None)

    sp = add("graph", cmd_graph, "overlap graph statistics or DOT")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--pruned", action="store_true", help="transfer graph instead of full P_k")
    sp.add_argument("--variant", choices=(NODE, ARC), default=None)
    sp.add_argument("--dot", action="store_true")
    sp.add_argument("--labels", action="store_true", help="label DOT arcs with realizing permutations")

    sp = add("poset", cmd_poset, "poset forced by the window path")
    sp.add_argument("perm")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--dot", action="store_true")

    sp = add("classify", cmd_classify, "m such that perm is m-k-determined")
    sp.add_argument("perm")
    sp.add_argument("--k", type=int, required=True)

    sp = add("realize", cmd_realize, "permutations having a given window path")
    sp.add_argument("nodes", nargs="+")

    sp = add("crucial", cmd_crucial, "search for crucial permutations")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--max-n", type=int, required=True)

    sp = add("ir-dist", cmd_irdist, "distribution of the index of reconstructibility")
    sp.add_argument("--n", type=int, required=True)

    sp = add("m-dist", cmd_mdist, "distribution of m over S_n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    return parser


def _parameters(args) -> dict:
    skip = {"func", "command", "format"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}


def render(args, report: Report) -> str:
    if report.text is not None:
        return report.text
    if args.format == "json":
        envelope = {"schema": SCHEMA, "command": args.command, "parameters": _parameters(args),
                    "method": report.method, "result": report.result}
        return json.dumps(envelope, indent=2, sort_keys=True) + "\n"
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if report.table is not None:
            w.writerow(report.header)
            w.writerows(report.table)
        else:
            w.writerow(["key", "value"])
            for key, value in sorted(report.result.items()):
                w.writerow([key, json.dumps(value) if isinstance(value, (list, dict)) else value])
        return buf.getvalue()
    lines = []
    for key, value in sorted(report.result.items()):
        if isinstance(value, list):
            value = " ".join(json.dumps(v) if isinstance(v, (list, dict)) else str(v) for v in value)
        elif isinstance(value, dict):
            value = json.dumps(value, sort_keys=True)
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimit as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (ConsistencyError, FitFailure) as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return 4
    sys.stdout.write(render(args, report))
    return 0


if __name__ == "__main__":
    sys.exit(main())
