"""Path-schemes P(n, M) and directed Hamiltonian paths in G_{k,n}.

Uniquely k-determined n-permutations are in bijection with directed
Hamiltonian paths of G_{k,n} = P(n, {1..k-1}): the path spelled by the
inverse permutation.  This module is the reference counting engine that
the transfer-matrix engine is checked against.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from math import factorial
from typing import Iterator

from . import config
from .config import DEFAULT
from .errors import InvalidInput
from .perm import Perm, inverse


@dataclass(frozen=True)
class PathScheme:
    n: int
    M: frozenset[int]

    def has_edge(self, x: int, y: int) -> bool:
        return abs(x - y) in self.M

    def edges(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(1, self.n + 1) for y in range(x + 1, self.n + 1)
                if self.has_edge(x, y)]

    def neighbors(self, x: int) -> list[int]:
        return [y for y in range(1, self.n + 1) if self.has_edge(x, y)]

    def max_degree(self) -> int:
        return max((len(self.neighbors(x)) for x in range(1, self.n + 1)), default=0)


def build_path_scheme(n: int, M) -> PathScheme:
    if n < 1:
        raise InvalidInput("path-scheme needs n >= 1")
    M = frozenset(int(d) for d in M)
    bad = [d for d in M if not 1 <= d <= n - 1]
    if bad:
        raise InvalidInput(f"differences {sorted(bad)} outside 1..{n - 1}")
    return PathScheme(n, M)


def G(k: int, n: int) -> PathScheme:
    """G_{k,n}; differences are clipped to n-1 so that k > n is allowed."""
    return build_path_scheme(n, range(1, min(k, n)))


def count_hamiltonian_paths(g: PathScheme, limit: int | None = None) -> int:
    """Number of directed Hamiltonian paths, by DP over (visited set, endpoint).

    Only reachable states are stored, layer by layer, which for the
    narrow-band schemes G_{k,n} is far fewer than 2^n * n.
    """
    n = g.n
    config.check("n", n, DEFAULT.hamiltonian_n if limit is None else limit)
    adj = [0] * n
    for x, y in g.edges():
        adj[x - 1] |= 1 << (y - 1)
        adj[y - 1] |= 1 << (x - 1)
    layer: dict[tuple[int, int], int] = {(1 << v, v): 1 for v in range(n)}
    for _ in range(n - 1):
        nxt: dict[tuple[int, int], int] = defaultdict(int)
        for (mask, last), c in layer.items():
            free = adj[last] & ~mask
            while free:
                bit = free & -free
                free ^= bit
                nxt[mask | bit, bit.bit_length() - 1] += c
        layer = nxt
    return sum(layer.values())


def enumerate_hamiltonian_paths(g: PathScheme) -> Iterator[tuple[int, ...]]:
    """Yield every directed Hamiltonian path once, in lexicographic order."""
    n = g.n
    nbrs = {x: g.neighbors(x) for x in range(1, n + 1)}
    path: list[int] = []
    seen = [False] * (n + 1)

    def extend(x: int):
        path.append(x)
        seen[x] = True
        if len(path) == n:
            yield tuple(path)
        else:
            for y in nbrs[x]:
                if not seen[y]:
                    yield from extend(y)
        seen[x] = False
        path.pop()

    for start in range(1, n + 1):
        yield from extend(start)


def phi(p: Perm) -> tuple[int, ...]:
    """The Hamiltonian path in G_{n,n} spelled by p^{-1}."""
    return inverse(p)


def phi_inverse(path, k: int) -> Perm:
    path = tuple(path)
    n = len(path)
    if sorted(path) != list(range(1, n + 1)):
        raise InvalidInput(f"{path} does not visit each of 1..{n} once")
    for a, b in zip(path, path[1:]):
        if abs(a - b) > k - 1:
            raise InvalidInput(f"step {a}->{b} is not an edge of G_{{{k},{n}}}")
    return inverse(path)


def ukd_permutations(k: int, n: int) -> Iterator[Perm]:
    """All uniquely k-determined n-permutations (order follows their inverses)."""
    if n == 0:
        yield ()
        return
    for path in enumerate_hamiltonian_paths(G(k, n)):
        yield inverse(path)


def bounds(k: int, n: int) -> tuple[int, int]:
    """Lower and upper bounds 2((k-1)!)^floor(n/k) and 2(2(k-1))^n on A_{k,n}."""
    if k < 2 or n < 2 * k - 1:
        raise InvalidInput(f"bounds need k >= 2 and n >= 2k-1, got k={k}, n={n}")
    return 2 * factorial(k - 1) ** (n // k), 2 * (2 * (k - 1)) ** n
