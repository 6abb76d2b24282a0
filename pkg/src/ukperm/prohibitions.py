"""Irreducible prohibited patterns L_k and right extension of uniquely k-determined permutations."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from . import config
from .config import DEFAULT
from .determinacy import is_uniquely_determined
from .errors import InvalidInput
from .pathscheme import ukd_permutations
from .perm import Perm, format_perm, insert_right, inverse, reduce_pattern


@dataclass(frozen=True)
class ProhibitionSet:
    k: int
    patterns: tuple[Perm, ...]

    def __contains__(self, p) -> bool:
        return tuple(p) in self.patterns

    def by_length(self) -> dict[int, int]:
        return dict(sorted(Counter(map(len, self.patterns)).items()))

    @property
    def longest(self) -> int:
        return max(map(len, self.patterns), default=0)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "patterns": [format_perm(p) for p in self.patterns],
            "by_length": {str(n): c for n, c in self.by_length().items()},
        }


@dataclass(frozen=True)
class Witness:
    x: int
    positions: tuple[int, int]  # positions of x and x+1

    def to_json(self) -> dict:
        return {"x": self.x, "positions": list(self.positions)}


def generate_prohibitions(k: int, max_length: int | None = None, limit: int | None = None) -> ProhibitionSet:
    """All irreducible prohibitions of length k+1 .. max_length (default 2k-1).

    Every candidate of length L has a uniquely k-determined prefix pattern,
    so it is enough to right-extend each uniquely k-determined (L-1)-permutation
    in every possible way and keep the non-determined ones whose suffix
    pattern is determined.  Passing ``max_length`` > 2k-1 lets callers check
    that nothing longer turns up.
    """
    if k < 2:
        raise InvalidInput("prohibitions are defined for k >= 2")
    config.check("k", k, DEFAULT.prohibition_k if limit is None else limit)
    top = 2 * k - 1 if max_length is None else max_length
    found = []
    for length in range(k + 1, top + 1):
        for q in ukd_permutations(k, length - 1):
            for v in range(1, length + 1):
                p = insert_right(q, v)
                if not is_uniquely_determined(p, k) and is_uniquely_determined(reduce_pattern(p[1:]), k):
                    found.append(p)
    return ProhibitionSet(k, tuple(sorted(found, key=lambda p: (len(p), p))))


def is_irreducible(p: Perm, k: int) -> bool:
    if is_uniquely_determined(p, k):
        raise InvalidInput(f"{format_perm(p)} is uniquely {k}-determined, not a prohibition")
    n = len(p)
    return is_uniquely_determined(reduce_pattern(p[: n - 1]), k) and \
        is_uniquely_determined(reduce_pattern(p[1:]), k)


def contains_prohibition(p: Perm, k: int) -> Witness | None:
    """A pair x, x+1 at distance >= k, or None when p is uniquely k-determined.

    The closest such pair is reported, smallest x on ties.
    """
    pos = inverse(p)
    best = None
    for x in range(1, len(p)):
        d = abs(pos[x] - pos[x - 1])
        if d >= k and (best is None or d < best[0]):
            best = (d, x)
    if best is None:
        return None
    x = best[1]
    return Witness(x, (pos[x - 1], pos[x]))


def avoids(p: Perm, prohibitions: ProhibitionSet) -> bool:
    """True iff no factor of p reduces to a member of ``prohibitions``."""
    members = set(prohibitions.patterns)
    n = len(p)
    for length in prohibitions.by_length():
        for i in range(n - length + 1):
            if reduce_pattern(p[i : i + length]) in members:
                return False
    return True


def extension_witness(p: Perm, k: int) -> int:
    """Value v such that ``insert_right(p, v)`` stays uniquely k-determined.

    Last entry 1 -> append a new minimum; last entry n -> a new maximum.
    Otherwise x-1 or x+1 sits within distance k-2 of the end; prefer
    x-1 (append x, bumping the old x), else x+1 (append x+1).
    """
    if k < 2:
        raise InvalidInput("extension needs k >= 2")
    if not is_uniquely_determined(p, k):
        raise InvalidInput(f"{format_perm(p)} is not uniquely {k}-determined")
    n = len(p)
    if n == 0:
        return 1
    x = p[-1]
    if x == 1:
        return 1
    if x == n:
        return n + 1
    near = p[max(0, n - k + 1) : n - 1]
    if x - 1 in near:
        return x
    if x + 1 in near:
        return x + 1
    raise AssertionError(f"no neighbour of {x} near the end of {p}")


def find_crucial(k: int, n: int, limit: int | None = None) -> Perm | None:
    """A uniquely k-determined n-permutation with no determined right extension, if any."""
    config.check("n", n, DEFAULT.exhaustive_n if limit is None else limit)
    for p in ukd_permutations(k, n):
        if not any(is_uniquely_determined(insert_right(p, v), k) for v in range(1, n + 2)):
            return p
    return None
