"""Window paths and the two criteria for unique k-determinability."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import config
from .config import DEFAULT
from .errors import InvalidInput
from .perm import Perm, inverse, perms_array, reduce_pattern


@dataclass(frozen=True)
class WindowPath:
    k: int
    nodes: tuple[Perm, ...]

    def __post_init__(self):
        for node in self.nodes:
            if len(node) != self.k:
                raise InvalidInput(f"node {node} has length != {self.k}")
        for a, b in zip(self.nodes, self.nodes[1:]):
            if reduce_pattern(a[1:]) != reduce_pattern(b[:-1]):
                raise InvalidInput(f"{a} -> {b} violates the overlap rule")

    @property
    def arc_count(self) -> int:
        return len(self.nodes) - 1

    @property
    def n(self) -> int:
        return self.k + self.arc_count


def window_path(p: Perm, k: int) -> WindowPath:
    """Reduced length-k windows of ``p`` read left to right."""
    if not 1 <= k <= len(p):
        raise InvalidInput(f"window length {k} needs 1 <= k <= n={len(p)}")
    return WindowPath(k, tuple(reduce_pattern(p[i : i + k]) for i in range(len(p) - k + 1)))


def is_uniquely_determined(p: Perm, k: int) -> bool:
    pos = inverse(p)
    return all(abs(pos[x] - pos[x - 1]) <= k - 1 for x in range(1, len(p)))


def is_uniquely_determined_via_inverse(p: Perm, k: int) -> bool:
    # Hamiltonian-path reading: consecutive entries of p^{-1} must be adjacent in G_{k,n}.
    q = inverse(p)
    for a, b in zip(q, q[1:]):
        if abs(a - b) > k - 1:
            return False
    return True


def ir_index(p: Perm) -> int:
    if len(p) <= 1:
        return 1
    pos = inverse(p)
    return 1 + max(abs(b - a) for a, b in zip(pos, pos[1:]))


def ir_distribution(n: int, limit: int | None = None) -> dict[int, int]:
    """Histogram of the index of reconstructibility over all of S_n."""
    config.check("n", n, DEFAULT.exhaustive_n if limit is None else limit)
    if n <= 1:
        return {1: 1}
    # p -> p^{-1} is a bijection of S_n, so sweeping inverses directly is equivalent.
    q = perms_array(n).astype(np.int16)
    ir = np.abs(np.diff(q, axis=1)).max(axis=1) + 1
    values, counts = np.unique(ir, return_counts=True)
    return {int(v): int(c) for v, c in zip(values, counts)}


# --- two predetermined non-adjacent elements <-> uniquely (n-1)-determined ---

def _chase(v: int, sub: dict[int, int], stop: set[int]) -> int:
    while v in sub and v in stop:
        v = sub[v]
    return v


def key_bijection(p: Perm, a: int, b: int) -> Perm:
    """Map ``p`` with non-adjacent marked values a, b to a uniquely (n-1)-determined permutation.

    The result starts with pos(a), ends with pos(b), and its middle is ``p``
    with a and b deleted and the values pos(a), pos(b) renamed to a, b.
    When a renamed value is itself one of a, b the renaming is followed
    through, which keeps the map a bijection for every choice of a, b.
    """
    n = len(p)
    if n < 2 or a == b or a not in p or b not in p:
        raise InvalidInput(f"need distinct values a={a}, b={b} of {p}")
    i, j = p.index(a) + 1, p.index(b) + 1
    if abs(i - j) < 2:
        raise InvalidInput(f"values {a} and {b} are adjacent in {p}")
    sub = {i: a, j: b}
    middle = tuple(_chase(v, sub, {i, j}) for v in p if v not in (a, b))
    return (i,) + middle + (j,)


def key_bijection_inverse(q: Perm, a: int, b: int) -> Perm:
    n = len(q)
    if n < 2 or a == b or not (1 <= a <= n and 1 <= b <= n):
        raise InvalidInput(f"need distinct values a={a}, b={b} in 1..{n}")
    i, j = q[0], q[-1]
    if abs(i - j) < 2:
        raise InvalidInput(f"{q} is not uniquely {n - 1}-determined")
    sub = {a: i, b: j}
    middle = iter(_chase(v, sub, {a, b}) for v in q[1:-1])
    out = [next(middle) if pos not in (i, j) else 0 for pos in range(1, n + 1)]
    out[i - 1], out[j - 1] = a, b
    return tuple(out)


def ir_histogram_from_counts(n: int, counts_by_k: dict[int, int]) -> dict[int, int]:
    """Turn cumulative counts A_{k,n} (k = 1..n) into an IR histogram."""
    hist = Counter()
    prev = 0
    for k in sorted(counts_by_k):
        cur = counts_by_k[k]
        if cur != prev:
            hist[k] = cur - prev
        prev = cur
    return dict(hist)
