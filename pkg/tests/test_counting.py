from itertools import permutations
from math import factorial

import pytest
import sympy

from ukperm import counting
from ukperm.counting import (
    ARC,
    NODE,
    RationalGF,
    build_transfer_graph,
    count_bruteforce,
    count_via_transfer,
    fit_rational_gf,
    gf_reference_k3,
    series,
)
from ukperm.determinacy import is_uniquely_determined
from ukperm.errors import ConsistencyError, FitFailure, InvalidInput, ResourceLimit
from ukperm.pathscheme import bounds
from ukperm.prohibitions import generate_prohibitions

K3_ROW = [1, 2, 6, 12, 20, 34, 56, 88, 136]


def brute_count(k, n):
    return sum(1 for p in permutations(range(1, n + 1)) if is_uniquely_determined(p, k))


def test_bruteforce_examples():
    assert count_bruteforce(3, 5) == 20
    assert count_bruteforce(6, 8) == 15600
    assert count_bruteforce(6, 9) == 61872
    assert count_bruteforce(5, 5) == 120
    assert count_bruteforce(3, 0) == 1


@pytest.mark.parametrize("n", range(0, 8))
def test_bruteforce_matches_filtering(n):
    for k in range(1, n + 2):
        assert count_bruteforce(k, n) == brute_count(k, n)


def test_bruteforce_domain_and_budget():
    with pytest.raises(InvalidInput):
        count_bruteforce(0, 3)
    with pytest.raises(ResourceLimit):
        count_bruteforce(3, 25)


def test_transfer_graph_shapes():
    g = build_transfer_graph(3, ARC)
    assert (g.node_count, g.arc_count, g.weighted_arc_count) == (12, 20, 20)
    assert build_transfer_graph(3, NODE).node_count == 20
    g = build_transfer_graph(2, NODE)
    assert g.nodes == ((1, 2, 3), (3, 2, 1))
    assert sorted((a, b) for a, b, _ in g.arcs()) == [((1, 2, 3), (1, 2, 3)), ((3, 2, 1), (3, 2, 1))]


def test_transfer_graph_errors():
    with pytest.raises(ResourceLimit):
        build_transfer_graph(5, NODE)
    with pytest.raises(ResourceLimit):
        build_transfer_graph(6, ARC)
    with pytest.raises(InvalidInput):
        build_transfer_graph(3, "dense")
    with pytest.raises(InvalidInput):
        build_transfer_graph(1, NODE)


def test_transfer_examples():
    assert count_via_transfer(3, 9) == 136
    assert count_via_transfer(3, 5) == 20
    assert count_via_transfer(4, 9) == 2512
    assert count_via_transfer(3, 9, ARC) == 136


@pytest.mark.parametrize("k", [2, 3, 4])
def test_three_engines_agree(k):
    for n in range(0, 13):
        h = count_bruteforce(k, n)
        assert count_via_transfer(k, n, NODE) == h
        assert count_via_transfer(k, n, ARC) == h


def test_arc_engine_k5():
    for n in range(8, 13):
        assert count_via_transfer(5, n, ARC) == count_bruteforce(5, n)


def test_series_examples():
    assert list(series(3, 9).counts) == [1] + K3_ROW
    assert list(series(7, 9).counts)[-3:] == [5040, 30240, 159840]
    for n in range(1, 8):
        assert count_bruteforce(n, n + 1) == factorial(n) * (n - 1)


def test_series_detects_disagreement(monkeypatch):
    monkeypatch.setattr(counting, "count_walks", lambda g, arcs: -1)
    with pytest.raises(ConsistencyError):
        series(3, 7)


def test_series_exports():
    t = series(3, 5)
    assert t.to_csv().splitlines()[0] == "n,count,method"
    assert t.to_csv().splitlines()[-1] == "5,20,transfer"
    assert t.to_json()["counts"] == ["1", "1", "2", "6", "12", "20"]


def test_count_table_invariants():
    for k in range(1, 7):
        counts = [count_bruteforce(k, n) for n in range(0, 11)]
        for n, c in enumerate(counts):
            assert c <= factorial(n)
            if n <= k:
                assert c == factorial(n)
        if 2 <= k <= 5:
            pset = generate_prohibitions(k)
            assert counts[k + 1] == factorial(k + 1) - pset.by_length().get(k + 1, 0)
        for n in range(0, 11):
            assert count_bruteforce(k, n) <= count_bruteforce(k + 1, n)


def test_growth_bounds_sandwich():
    for k in (3, 4, 5):
        for n in range(2 * k - 1, 15):
            lo, hi = bounds(k, n)
            assert lo < count_bruteforce(k, n) < hi


def test_k2_lower_bound_is_not_strict():
    lo, _ = bounds(2, 5)
    assert lo == count_bruteforce(2, 5) == 2


def test_reference_gf_expansion():
    gf = gf_reference_k3()
    coeffs = gf.coefficients(10)
    assert coeffs[0] == 1 and coeffs[5] == 20
    assert coeffs[1:] == K3_ROW
    x = sympy.Symbol("x")
    expr = (1 - 2 * x + 2 * x**2 + x**3 - x**5 + x**6) / ((1 - x - x**3) * (1 - x) ** 2)
    poly = sympy.series(expr, x, 0, 30).removeO()
    assert gf.coefficients(30) == [int(poly.coeff(x, i)) for i in range(30)]


def test_fit_k3_recovers_reference():
    t = series(3, 25)
    gf = fit_rational_gf(t, 12)
    assert gf == gf_reference_k3().reduced()
    assert gf.denominator[0] == 1


def test_fit_constant_sequence():
    gf = fit_rational_gf([1, 1] + [2] * 20, 5)
    assert gf.denominator == (1, -1)
    assert gf.coefficients(30) == [1, 1] + [2] * 28


def test_fit_k4_extrapolates():
    t = series(4, 61, crosscheck_n=14)
    gf = fit_rational_gf(t.counts[:52], 25)
    assert gf.coefficients(62) == list(t.counts)


def test_fit_failures():
    with pytest.raises(InvalidInput):
        fit_rational_gf([1, 2, 3], 5)
    fib_like = [1, 1, 2, 6, 12, 20, 34, 56, 88, 136, 208, 314]
    with pytest.raises(FitFailure):
        fit_rational_gf(fib_like, 3)
    with pytest.raises(FitFailure):
        fit_rational_gf([factorial(n) for n in range(20)], 9)


def test_reduction_cancels_common_factors():
    # (1 - x)(1 + x) / ((1 - x)(1 - 2x))
    gf = RationalGF((1, 0, -1), (1, -3, 2)).reduced()
    assert gf == RationalGF((1, 1), (1, -2))
