from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from ukperm.determinacy import is_uniquely_determined, window_path
from ukperm.errors import InvalidInput, ResourceLimit
from ukperm.overlap import realize_path
from ukperm.posets import (
    Poset,
    count_linear_extensions,
    count_linear_extensions_brute,
    incomparable_pairs,
    linear_extensions,
    m_distribution,
    m_index,
    poset_from_permutation,
)

from conftest import path_classes, perms, windows


def brute_incomparable(p, k):
    """Values of p at position pairs whose relative order varies across p's path class."""
    cls = path_classes(len(p), k)[windows(p, k)]
    n = len(p)
    out = set()
    for i in range(n):
        for j in range(i + 1, n):
            if len({q[i] < q[j] for q in cls}) == 2:
                out.add((min(p[i], p[j]), max(p[i], p[j])))
    return out


def test_figure_poset():
    w = poset_from_permutation((1, 3, 4, 2, 6, 5), 3)
    assert incomparable_pairs(w) == {(1, 2), (1, 5), (3, 5), (4, 5)}
    assert count_linear_extensions(w) == 7
    assert m_index((1, 3, 4, 2, 6, 5), 3) == 7


def test_poset_of_13542():
    # (1,2) is also split: d(1,2) = 4.
    w = poset_from_permutation((1, 3, 5, 4, 2), 3)
    assert incomparable_pairs(w) == brute_incomparable((1, 3, 5, 4, 2), 3) == {(1, 2), (2, 3)}
    assert m_index((1, 3, 5, 4, 2), 3) == 3


def test_full_window_gives_chain():
    p = (2, 5, 3, 1, 6, 4)
    w = poset_from_permutation(p, 6)
    assert w.is_chain()
    assert count_linear_extensions(w) == 1


def test_antichain_and_chain_counts():
    assert count_linear_extensions(Poset.from_relations(6, [])) == factorial(6)
    chain = Poset.from_relations(5, [(i, i + 1) for i in range(1, 5)])
    assert count_linear_extensions(chain) == 1
    assert incomparable_pairs(chain) == set()
    assert count_linear_extensions(poset_from_permutation((3, 1, 2, 4), 1)) == 24


def test_cycle_is_rejected():
    assert Poset.from_relations(3, [(1, 2), (2, 3), (3, 1)]) is None


def test_k_greater_than_n():
    with pytest.raises(InvalidInput):
        poset_from_permutation((1, 2), 3)


def test_budget():
    with pytest.raises(ResourceLimit):
        count_linear_extensions(Poset.from_relations(21, []))


def test_cover_relations_of_figure():
    w = poset_from_permutation((1, 3, 4, 2, 6, 5), 3)
    assert w.cover_relations() == [(1, 3), (2, 3), (2, 5), (3, 4), (4, 6), (5, 6)]
    assert w.to_json()["incomparable_pairs"] == [[1, 2], [1, 5], [3, 5], [4, 5]]
    dot = w.to_dot()
    assert dot.count("->") == 6


@st.composite
def posets(draw):
    n = draw(st.integers(0, 7))
    pairs = draw(st.lists(st.tuples(st.integers(1, max(n, 1)), st.integers(1, max(n, 1))), max_size=12))
    pairs = [(min(a, b), max(a, b)) for a, b in pairs if a != b and n]
    return Poset.from_relations(n, pairs)


@given(posets())
def test_downset_dp_matches_brute_force(w):
    assert count_linear_extensions(w) == count_linear_extensions_brute(w)
    assert count_linear_extensions(w) == len(set(linear_extensions(w)))


@given(posets())
def test_relation_is_a_strict_order_refining_values(w):
    n = w.n
    for u in range(1, n + 1):
        assert not w.below(u, u)
        for v in range(1, n + 1):
            if w.below(u, v):
                assert u < v and not w.below(v, u)
                for t in range(1, n + 1):
                    if w.below(v, t):
                        assert w.below(u, t)


def positional(q, k):
    w = poset_from_permutation(q, k)
    n = len(q)
    return {(q.index(u), q.index(v)) for u in range(1, n + 1) for v in range(1, n + 1) if w.below(u, v)}


@settings(max_examples=60, deadline=None)
@given(perms(min_size=1, max_size=7), st.integers(1, 7))
def test_poset_properties(p, k):
    if k > len(p):
        return
    w = poset_from_permutation(p, k)
    assert w.is_chain() == is_uniquely_determined(p, k)
    assert incomparable_pairs(w) == brute_incomparable(p, k)
    members = realize_path(window_path(p, k))
    m = m_index(p, k)
    assert m == len(members) == len(path_classes(len(p), k)[windows(p, k)])
    if len(incomparable_pairs(w)) == 1:
        assert m == 2
    for q in members:
        assert m_index(q, k) == m
        assert positional(q, k) == positional(p, k)


def test_m_distribution_examples():
    dist = m_distribution(5, 3)
    assert dist[1] == 20
    assert sum(dist.values()) == 120
    for m, c in dist.items():
        assert c % m == 0


@pytest.mark.parametrize("n, k", [(4, 2), (5, 2), (5, 3), (6, 3), (6, 4), (7, 3)])
def test_m_distribution_matches_posets(n, k):
    by_poset = {}
    for p in permutations(range(1, n + 1)):
        m = m_index(p, k)
        by_poset[m] = by_poset.get(m, 0) + 1
    assert m_distribution(n, k) == dict(sorted(by_poset.items()))
