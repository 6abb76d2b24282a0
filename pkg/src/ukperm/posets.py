"""Posets forced by window paths, and linear-extension counting.

Two readings of the same order are used.  ``poset_from_permutation``
works on values: u < v is forced when u and v sit in a common window.
``position_poset`` works on positions of a bare window path, so the
linear extensions are literally the permutations sharing that path.
The two posets are isomorphic through p.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import config
from .config import DEFAULT
from .errors import InvalidInput
from .perm import Perm, perms_array


@dataclass(frozen=True)
class Poset:
    """Strict order on 1..n; bit u-1 of ``down[v-1]`` is set iff u is below v."""

    n: int
    down: tuple[int, ...]

    @classmethod
    def from_relations(cls, n: int, pairs) -> "Poset | None":
        """Transitive closure of the given (lower, upper) pairs; None if cyclic."""
        down = [0] * n
        for u, v in pairs:
            down[v - 1] |= 1 << (u - 1)
        for w in range(n):
            bw = 1 << w
            for v in range(n):
                if down[v] & bw:
                    down[v] |= down[w]
        if any(down[v] >> v & 1 for v in range(n)):
            return None
        return cls(n, tuple(down))

    def below(self, u: int, v: int) -> bool:
        return bool(self.down[v - 1] >> (u - 1) & 1)

    def comparable(self, u: int, v: int) -> bool:
        return self.below(u, v) or self.below(v, u)

    def is_chain(self) -> bool:
        return not incomparable_pairs(self)

    def cover_relations(self) -> list[tuple[int, int]]:
        covers = []
        for v in range(1, self.n + 1):
            for u in range(1, self.n + 1):
                if not self.below(u, v):
                    continue
                # u -< v unless some w sits strictly between
                between = self.down[v - 1] & ~(1 << (u - 1))
                if not any(between >> (w - 1) & 1 and self.below(u, w)
                           for w in range(1, self.n + 1)):
                    covers.append((u, v))
        return sorted(covers)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "cover_relations": [list(c) for c in self.cover_relations()],
            "incomparable_pairs": [list(c) for c in sorted(incomparable_pairs(self))],
        }

    def to_dot(self, name: str = "poset") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        lines += [f'  "{v}";' for v in range(1, self.n + 1)]
        lines += [f'  "{u}" -> "{v}";' for u, v in self.cover_relations()]
        lines.append("}")
        return "\n".join(lines) + "\n"


def poset_from_permutation(p: Perm, k: int) -> Poset:
    n = len(p)
    if not 1 <= k <= n:
        raise InvalidInput(f"window length {k} needs 1 <= k <= n={n}")
    pairs = []
    for i in range(n):
        for j in range(i + 1, min(i + k, n)):
            a, b = p[i], p[j]
            pairs.append((a, b) if a < b else (b, a))
    return Poset.from_relations(n, pairs)


def position_poset(nodes, k: int) -> Poset | None:
    """Order on positions 1..n forced by consecutive k-windows; None if inconsistent."""
    n = k + len(nodes) - 1
    pairs = []
    for s, node in enumerate(nodes):
        for a in range(k):
            for b in range(a + 1, k):
                pa, pb = s + a + 1, s + b + 1
                pairs.append((pa, pb) if node[a] < node[b] else (pb, pa))
    return Poset.from_relations(n, pairs)


def incomparable_pairs(w: Poset) -> set[tuple[int, int]]:
    return {(u, v) for u in range(1, w.n + 1) for v in range(u + 1, w.n + 1)
            if not w.comparable(u, v)}


def count_linear_extensions(w: Poset, limit: int | None = None) -> int:
    """Exact count by DP over order ideals (downsets), stored sparsely by size."""
    config.check("n", w.n, DEFAULT.poset_n if limit is None else limit)
    layer = {0: 1}
    for _ in range(w.n):
        nxt: dict[int, int] = defaultdict(int)
        for ideal, c in layer.items():
            for v in range(w.n):
                bit = 1 << v
                if not ideal & bit and w.down[v] & ~ideal == 0:
                    nxt[ideal | bit] += c
        layer = nxt
    return sum(layer.values())


def linear_extensions(w: Poset) -> Iterator[tuple[int, ...]]:
    """Yield linear extensions as orderings of the elements, bottom first."""
    n = w.n
    order: list[int] = []

    def rec(ideal: int):
        if len(order) == n:
            yield tuple(order)
            return
        for v in range(n):
            bit = 1 << v
            if not ideal & bit and w.down[v] & ~ideal == 0:
                order.append(v + 1)
                yield from rec(ideal | bit)
                order.pop()

    yield from rec(0)


def count_linear_extensions_brute(w: Poset) -> int:
    """Second oracle: filter all of S_n (small n only)."""
    config.check("n", w.n, 8)
    from itertools import permutations

    total = 0
    for order in permutations(range(1, w.n + 1)):
        rank = {v: i for i, v in enumerate(order)}
        if all(rank[u] < rank[v] for v in range(1, w.n + 1) for u in range(1, w.n + 1)
               if w.below(u, v)):
            total += 1
    return total


def m_index(p: Perm, k: int) -> int:
    """Number of n-permutations sharing the k-window path of ``p``."""
    return count_linear_extensions(poset_from_permutation(p, k))


def window_codes(perms: np.ndarray, k: int) -> np.ndarray:
    """Encode every k-window pattern of every row as a small integer."""
    rows, n = perms.shape
    weights = k ** np.arange(k, dtype=np.int64)
    codes = np.empty((rows, n - k + 1), dtype=np.int64)
    for s in range(n - k + 1):
        ranks = np.argsort(np.argsort(perms[:, s : s + k], axis=1, kind="stable"), axis=1)
        codes[:, s] = ranks @ weights
    return codes


def m_distribution(n: int, k: int, limit: int | None = None) -> dict[int, int]:
    """For each m, how many n-permutations are m-k-determined (brute force over S_n)."""
    config.check("n", n, DEFAULT.exhaustive_n if limit is None else limit)
    if not 1 <= k <= n:
        raise InvalidInput(f"window length {k} needs 1 <= k <= n={n}")
    codes = window_codes(perms_array(n), k)
    _, sizes = np.unique(codes, axis=0, return_counts=True)
    dist = Counter()
    for size, classes in Counter(sizes.tolist()).items():
        dist[size] = size * classes
    return dict(sorted(dist.items()))
