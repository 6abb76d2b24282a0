"""Counting uniquely k-determined permutations three ways, and their generating functions.

Engines:
  hamiltonian  directed Hamiltonian paths of G_{k,n} (subset DP)
  transfer     walks with n-2k+1 arcs in the overlap graph on uniquely
               k-determined (2k-1)-permutations
  arc          walks with n-2k+2 arcs in the overlap graph on uniquely
               k-determined (2k-2)-permutations, arcs weighted by their
               uniquely k-determined (2k-1)-permutation labels
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm

import numpy as np
import sympy

from . import config
from .config import DEFAULT
from .determinacy import is_uniquely_determined
from .errors import ConsistencyError, FitFailure, InvalidInput
from .overlap import OverlapGraph, count_walks, graph_from_labels, graph_on_nodes
from .pathscheme import G, count_hamiltonian_paths, ukd_permutations

NODE = "node"
ARC = "arc"
VARIANTS = (NODE, ARC)


def count_bruteforce(k: int, n: int, limit: int | None = None) -> int:
    """A_{k,n} through the Hamiltonian-path bijection."""
    if k < 1 or n < 0:
        raise InvalidInput(f"need k >= 1 and n >= 0, got k={k}, n={n}")
    if n <= k:
        return factorial(n)
    return count_hamiltonian_paths(G(k, n), limit)


@lru_cache(maxsize=None)
def build_transfer_graph(k: int, variant: str = NODE) -> OverlapGraph:
    if k < 2:
        raise InvalidInput("transfer graphs need k >= 2")
    if variant == NODE:
        config.check("k", k, DEFAULT.node_transfer_k)
        return graph_on_nodes(2 * k - 1, ukd_permutations(k, 2 * k - 1))
    if variant == ARC:
        config.check("k", k, DEFAULT.arc_transfer_k)
        return graph_from_labels(
            2 * k - 2,
            ukd_permutations(k, 2 * k - 2),
            ukd_permutations(k, 2 * k - 1),
            label_filter=lambda q, k=k: is_uniquely_determined(q, k),
        )
    raise InvalidInput(f"unknown variant {variant!r}; expected one of {VARIANTS}")


def count_via_transfer(k: int, n: int, variant: str = NODE) -> int:
    """A_{k,n} as a walk count; short lengths the graph cannot see fall back to brute force."""
    first = 2 * k - 1 if variant == NODE else 2 * k - 2
    if n < first:
        return count_bruteforce(k, n)
    return count_walks(build_transfer_graph(k, variant), n - first)


@dataclass(frozen=True)
class CountTable:
    k: int
    counts: tuple[int, ...]  # counts[n] = A_{k,n}, starting at n = 0
    methods: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "counts": [str(c) for c in self.counts],
            "methods": list(self.methods),
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "count", "method"])
        for n, (c, m) in enumerate(zip(self.counts, self.methods)):
            w.writerow([n, c, m])
        return buf.getvalue()


def series(k: int, n_max: int, crosscheck_n: int = 20, variant: str | None = None) -> CountTable:
    """A_{k,0..n_max}; every index computed by two engines is required to agree.

    Below the transfer graph's reach the Hamiltonian DP is used alone.
    Beyond it the transfer count is authoritative, and up to
    ``crosscheck_n`` it is recomputed by the Hamiltonian DP as well.
    """
    if variant is None:
        variant = NODE if k <= DEFAULT.node_transfer_k else ARC
    counts, methods = [], []
    first = 2 * k - 1 if variant == NODE else 2 * k - 2
    for n in range(n_max + 1):
        if n < first or k < 2:
            counts.append(count_bruteforce(k, n))
            methods.append("hamiltonian")
            continue
        c = count_via_transfer(k, n, variant)
        if n <= crosscheck_n:
            h = count_bruteforce(k, n)
            if h != c:
                raise ConsistencyError(f"A_{{{k},{n}}}: transfer[{variant}]={c} but hamiltonian={h}")
        counts.append(c)
        methods.append("transfer")
    return CountTable(k, tuple(counts), tuple(methods))


# --- rational generating functions -------------------------------------------

def _trim(coeffs) -> tuple:
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def polymul(a, b) -> tuple[int, ...]:
    return _trim(int(c) for c in np.convolve(np.array(a, dtype=object), np.array(b, dtype=object)))


@dataclass(frozen=True)
class RationalGF:
    """numerator / denominator, coefficients in ascending powers; denominator[0] == 1."""

    numerator: tuple[int, ...]
    denominator: tuple[int, ...]

    def coefficients(self, count: int) -> list[int]:
        """First ``count`` power-series coefficients (exact; uses denominator[0] == 1)."""
        num, den = self.numerator, self.denominator
        out: list[int] = []
        for n in range(count):
            c = num[n] if n < len(num) else 0
            c -= sum(den[i] * out[n - i] for i in range(1, min(n, len(den) - 1) + 1))
            out.append(c)
        return out

    def reduced(self) -> "RationalGF":
        return _reduce(self.numerator, self.denominator)

    def to_json(self) -> dict:
        return {"numerator": list(self.numerator), "denominator": list(self.denominator)}


def _reduce(num, den) -> RationalGF:
    x = sympy.Symbol("x")
    p = sympy.Poly(list(reversed(num)), x, domain="QQ")
    q = sympy.Poly(list(reversed(den)), x, domain="QQ")
    g = sympy.gcd(p, q)
    p, q = sympy.div(p, g)[0], sympy.div(q, g)[0]
    lead = q.eval(0)
    p, q = p * (1 / lead), q * (1 / lead)

    def ints(poly) -> tuple[int, ...]:
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
        if any(c.denominator != 1 for c in coeffs):
            raise FitFailure(f"non-integral reduced coefficients {coeffs}")
        return _trim(int(c) for c in coeffs)

    return RationalGF(ints(p), ints(q))


def berlekamp_massey(seq) -> list[Fraction]:
    """Shortest connection polynomial over Q, ascending, with C[0] = 1.

    len(C) - 1 is the linear complexity L: sum_i C[i] * a[n - i] = 0 for all n >= L.
    """
    seq = [Fraction(s) for s in seq]
    C, B = [Fraction(1)], [Fraction(1)]
    L, m, b = 0, 1, Fraction(1)
    for n in range(len(seq)):
        d = seq[n] + sum(C[i] * seq[n - i] for i in range(1, L + 1) if i < len(C))
        if d == 0:
            m += 1
            continue
        coef = d / b
        T = list(C)
        C = C + [Fraction(0)] * max(0, len(B) + m - len(C))
        for i, bi in enumerate(B):
            C[i + m] -= coef * bi
        if 2 * L <= n:
            L, B, b, m = n + 1 - L, T, d, 1
        else:
            m += 1
    C = C + [Fraction(0)] * max(0, L + 1 - len(C))
    return C[: L + 1]


def fit_rational_gf(counts, degree_bound: int) -> RationalGF:
    """Smallest rational function reproducing every supplied term.

    Uses Berlekamp-Massey over the rationals to find the shortest linear
    recurrence, reads the numerator off the initial terms, then cancels
    common factors.  Fails if the recurrence is longer than
    ``degree_bound`` or if the result does not re-expand to the data.
    """
    terms = list(counts.counts if isinstance(counts, CountTable) else counts)
    if len(terms) < 2 * degree_bound + 2:
        raise InvalidInput(f"need at least {2 * degree_bound + 2} terms, got {len(terms)}")
    C = berlekamp_massey(terms)
    L = len(C) - 1
    if L > degree_bound:
        raise FitFailure(f"shortest recurrence has order {L} > bound {degree_bound}")
    num = [sum(C[i] * terms[n - i] for i in range(0, min(n, L) + 1)) for n in range(L)] or [Fraction(0)]
    den = list(C)
    if any(c.denominator != 1 for c in num + den):
        # Rescale to integers before reduction; _reduce normalises den[0] back to 1.
        scale = lcm(*(c.denominator for c in num + den))
        num, den = [c * scale for c in num], [c * scale for c in den]
    gf = _reduce(tuple(int(c) for c in num), tuple(int(c) for c in den))
    if gf.coefficients(len(terms)) != [int(t) for t in terms]:
        raise FitFailure("fitted generating function does not reproduce the input terms")
    return gf


def gf_reference_k3() -> RationalGF:
    """(1-2x+2x^2+x^3-x^5+x^6) / ((1-x-x^3)(1-x)^2)."""
    num = (1, -2, 2, 1, 0, -1, 1)
    den = polymul((1, -1, 0, -1), polymul((1, -1), (1, -1)))
    return RationalGF(num, den)
