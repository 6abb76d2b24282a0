"""Permutations in one-line notation and order-isomorphism helpers.

A permutation of length n is a tuple holding each of 1..n exactly once;
positions are 1-indexed in the public API (``p[i - 1]`` is pi_i).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .config import DEFAULT
from .errors import InvalidInput

Perm = tuple[int, ...]


def as_perm(values: Iterable[int]) -> Perm:
    p = tuple(int(v) for v in values)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise InvalidInput(f"{p!r} is not a permutation of 1..{len(p)}")
    if len(p) > DEFAULT.max_perm_len:
        raise InvalidInput(f"length {len(p)} exceeds cap {DEFAULT.max_perm_len}")
    return p


def reduce_pattern(word: Sequence[int]) -> Perm:
    """Return the permutation order-isomorphic to ``word``.

    >>> reduce_pattern((2, 5, 3))
    (1, 3, 2)
    """
    if len(set(word)) != len(word):
        raise InvalidInput(f"word {tuple(word)!r} has repeated entries")
    order = sorted(range(len(word)), key=word.__getitem__)
    out = [0] * len(word)
    for rank, i in enumerate(order, 1):
        out[i] = rank
    return tuple(out)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p, 1):
        out[v - 1] = i
    return tuple(out)


def complement(p: Perm) -> Perm:
    n = len(p)
    return tuple(n + 1 - v for v in p)


def reverse(p: Perm) -> Perm:
    return tuple(reversed(p))


def distance(p: Perm, x: int, y: int) -> int:
    """Absolute difference of the positions of values ``x`` and ``y``."""
    n = len(p)
    if not (1 <= x <= n and 1 <= y <= n):
        raise InvalidInput(f"values {x}, {y} outside 1..{n}")
    return abs(p.index(x) - p.index(y))


def factor_pattern(p: Perm, i: int, j: int) -> Perm:
    """Pattern of the contiguous factor p_i..p_j (1-indexed, inclusive)."""
    if not 1 <= i <= j <= len(p):
        raise InvalidInput(f"factor [{i}, {j}] outside 1..{len(p)}")
    return reduce_pattern(p[i - 1 : j])


def insert_right(p: Perm, v: int) -> Perm:
    """Append value ``v`` after bumping every entry >= v by one."""
    if not 1 <= v <= len(p) + 1:
        raise InvalidInput(f"value {v} outside 1..{len(p) + 1}")
    return tuple(x + 1 if x >= v else x for x in p) + (v,)


# --- text formats ---------------------------------------------------------

def parse_perm(text: str) -> tuple[Perm, str]:
    """Parse "13542" or "1,3,5,4,2"; returns the permutation and its format tag."""
    text = text.strip()
    if not text:
        return (), "compact"
    if "," in text:
        try:
            return as_perm(int(t) for t in text.split(",")), "comma"
        except ValueError as exc:
            raise InvalidInput(f"cannot parse {text!r}: {exc}") from None
    if not text.isdigit():
        raise InvalidInput(f"cannot parse {text!r}")
    return as_perm(int(c) for c in text), "compact"


def format_perm(p: Perm, style: str = "auto") -> str:
    if style == "comma" or (style == "auto" and len(p) > 9):
        return ",".join(map(str, p))
    if len(p) > 9:
        raise InvalidInput("compact format requires n <= 9")
    return "".join(map(str, p))


def perms_array(n: int) -> "np.ndarray":
    """All n! permutations of 1..n as rows of an int8 array (insertion order)."""
    import numpy as np

    out = np.ones((1, min(n, 1)), dtype=np.int8) if n else np.zeros((1, 0), dtype=np.int8)
    for m in range(2, n + 1):
        rows = out.shape[0]
        grown = np.empty((rows * m, m), dtype=np.int8)
        for pos in range(m):
            block = grown[pos * rows : (pos + 1) * rows]
            block[:, :pos] = out[:, :pos]
            block[:, pos] = m
            block[:, pos + 1 :] = out[:, pos:]
        out = grown
    return out
