"""The pattern-overlap graph P_m, its walks, and realization of walks as permutations."""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Iterable, Iterator

import numpy as np

from . import config
from .config import DEFAULT
from .determinacy import WindowPath
from .errors import InvalidInput
from .perm import Perm, format_perm, reduce_pattern
from .posets import linear_extensions, position_poset


@dataclass(frozen=True)
class OverlapGraph:
    """Directed graph on m-permutations; ``succ[i]`` lists (target index, multiplicity).

    Multiplicity counts the (m+1)-permutations realizing an arc; it is 1
    on every arc of a graph built without a label filter.
    """

    m: int
    nodes: tuple[Perm, ...]
    succ: tuple[tuple[tuple[int, int], ...], ...]
    index: dict[Perm, int] = field(repr=False, compare=False, hash=False)
    label_filter: Callable[[Perm], bool] | None = field(default=None, repr=False, compare=False, hash=False)

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def arc_count(self) -> int:
        return sum(len(s) for s in self.succ)

    @property
    def weighted_arc_count(self) -> int:
        return sum(mult for s in self.succ for _, mult in s)

    def arcs(self) -> Iterator[tuple[Perm, Perm, int]]:
        for i, out in enumerate(self.succ):
            for j, mult in out:
                yield self.nodes[i], self.nodes[j], mult

    def out_degree(self, node: Perm) -> int:
        return len(self.succ[self._idx(node)])

    def in_degrees(self) -> list[int]:
        deg = [0] * self.node_count
        for out in self.succ:
            for j, _ in out:
                deg[j] += 1
        return deg

    def _idx(self, node) -> int:
        try:
            return self.index[tuple(node)]
        except KeyError:
            raise InvalidInput(f"{tuple(node)} is not a node of this graph") from None

    def arc_labels(self, a: Perm, b: Perm) -> frozenset[Perm]:
        """All (m+1)-permutations whose two m-windows are a then b."""
        labels = realize_path(WindowPath(self.m, (tuple(a), tuple(b))))
        if self.label_filter is not None:
            labels = frozenset(q for q in labels if self.label_filter(q))
        return labels


def _assemble(m: int, nodes: Iterable[Perm], weight: Callable[[Perm, Perm], int] | None,
              label_filter: Callable[[Perm], bool] | None = None) -> OverlapGraph:
    nodes = tuple(sorted(set(nodes)))
    index = {p: i for i, p in enumerate(nodes)}
    by_prefix: dict[Perm, list[int]] = defaultdict(list)
    for i, p in enumerate(nodes):
        by_prefix[reduce_pattern(p[:-1])].append(i)
    succ = []
    for p in nodes:
        out = []
        for j in by_prefix.get(reduce_pattern(p[1:]), ()):
            w = 1 if weight is None else weight(p, nodes[j])
            if w:
                out.append((j, w))
        succ.append(tuple(out))
    return OverlapGraph(m, nodes, tuple(succ), index, label_filter)


def build_overlap_graph(m: int, excluded_nodes: Iterable[Perm] = (), limit: int | None = None) -> OverlapGraph:
    """P_m with the given nodes (and their arcs) removed."""
    if m < 1:
        raise InvalidInput("overlap graph needs m >= 1")
    config.check("m", m, DEFAULT.overlap_m if limit is None else limit)
    excluded = {tuple(p) for p in excluded_nodes}
    bad = [p for p in excluded if len(p) != m]
    if bad:
        raise InvalidInput(f"excluded nodes {bad} are not {m}-permutations")
    nodes = (p for p in permutations(range(1, m + 1)) if p not in excluded)
    return _assemble(m, nodes, None)


def graph_on_nodes(m: int, nodes: Iterable[Perm], label_filter: Callable[[Perm], bool] | None = None) -> OverlapGraph:
    """Overlap graph on an explicit node set.

    With ``label_filter`` every arc is weighted by the number of its
    (m+1)-permutation labels that pass the filter, and arcs left with no
    label are dropped.
    """
    if label_filter is None:
        return _assemble(m, nodes, None)

    def weight(a: Perm, b: Perm) -> int:
        return sum(1 for q in realize_path(WindowPath(m, (a, b))) if label_filter(q))

    return _assemble(m, nodes, weight, label_filter)


def graph_from_labels(m: int, nodes: Iterable[Perm], labels: Iterable[Perm],
                      label_filter: Callable[[Perm], bool] | None = None) -> OverlapGraph:
    """Arc-labelled overlap graph given its (m+1)-permutation labels directly.

    Each label q contributes one unit of multiplicity to the arc
    pattern(q[:-1]) -> pattern(q[1:]); labels touching absent nodes are ignored.
    """
    nodes = tuple(sorted(set(nodes)))
    index = {p: i for i, p in enumerate(nodes)}
    weights: dict[tuple[int, int], int] = defaultdict(int)
    for q in labels:
        a, b = index.get(reduce_pattern(q[:-1])), index.get(reduce_pattern(q[1:]))
        if a is not None and b is not None:
            weights[a, b] += 1
    succ = [[] for _ in nodes]
    for (a, b), w in sorted(weights.items()):
        succ[a].append((b, w))
    return OverlapGraph(m, nodes, tuple(map(tuple, succ)), index, label_filter)


def prune_arcs(g: OverlapGraph, keep_label: Callable[[Perm], bool]) -> OverlapGraph:
    return graph_on_nodes(g.m, g.nodes, keep_label)


def enumerate_paths(g: OverlapGraph, arc_count: int) -> Iterator[tuple[Perm, ...]]:
    """Every walk with ``arc_count`` arcs, lexicographic by node sequence."""
    if arc_count < 0:
        raise InvalidInput("arc_count must be >= 0")
    walk: list[int] = []

    def rec(i: int):
        walk.append(i)
        if len(walk) == arc_count + 1:
            yield tuple(g.nodes[t] for t in walk)
        else:
            for j, _ in g.succ[i]:
                yield from rec(j)
        walk.pop()

    for i in range(g.node_count):
        yield from rec(i)


def count_walks(g: OverlapGraph, arc_count: int) -> int:
    """Multiplicity-weighted number of walks with ``arc_count`` arcs.

    Repeated sparse matrix-vector products with Python integers, so the
    result is exact at any size.
    """
    vec = [1] * g.node_count
    for _ in range(arc_count):
        vec = [sum(mult * vec[j] for j, mult in out) for out in g.succ]
    return sum(vec)


def realize_path(path: WindowPath) -> frozenset[Perm]:
    """All permutations whose k-window path is ``path``; empty if none exists."""
    w = position_poset(path.nodes, path.k)
    if w is None:
        return frozenset()
    out = set()
    for order in linear_extensions(w):
        p = [0] * w.n
        for value, pos in enumerate(order, 1):
            p[pos - 1] = value
        out.add(tuple(p))
    return frozenset(out)


def reachable(g: OverlapGraph, u, v) -> bool:
    src, dst = g._idx(u), g._idx(v)
    seen = {src}
    queue = deque([src])
    while queue:
        i = queue.popleft()
        if i == dst:
            return True
        for j, _ in g.succ[i]:
            if j not in seen:
                seen.add(j)
                queue.append(j)
    return False


def scc_count(g: OverlapGraph) -> int:
    from scipy.sparse import csr_matrix
    from scipy.sparse.csgraph import connected_components

    rows = [i for i, out in enumerate(g.succ) for _ in out]
    cols = [j for out in g.succ for j, _ in out]
    mat = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(g.node_count,) * 2)
    return int(connected_components(mat, directed=True, connection="strong")[0])


def stats(g: OverlapGraph) -> dict:
    return {
        "m": g.m,
        "nodes": g.node_count,
        "arcs": g.arc_count,
        "weighted_arcs": g.weighted_arc_count,
        "strongly_connected_components": scc_count(g),
    }


def export_dot(g: OverlapGraph, name: str = "P", labels: bool = False) -> str:
    """DOT text; nodes and edges appear in lexicographic order."""
    lines = [f"digraph {name}{g.m} {{"]
    for p in g.nodes:
        lines.append(f'  "{format_perm(p)}";')
    for a, b, mult in g.arcs():
        attrs = []
        if labels:
            tags = ",".join(format_perm(q) for q in sorted(g.arc_labels(a, b)))
            attrs.append(f'label="{tags}"')
        elif mult > 1:
            attrs.append(f'label="{mult}"')
        suffix = f" [{' '.join(attrs)}]" if attrs else ""
        lines.append(f'  "{format_perm(a)}" -> "{format_perm(b)}"{suffix};')
    lines.append("}")
    return "\n".join(lines) + "\n"
