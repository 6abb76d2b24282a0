import pytest
from hypothesis import given

from ukperm.errors import InvalidInput
from ukperm.perm import (
    as_perm,
    complement,
    distance,
    factor_pattern,
    format_perm,
    insert_right,
    inverse,
    parse_perm,
    perms_array,
    reduce_pattern,
)

from conftest import perms


@pytest.mark.parametrize("word, expected", [
    ((2, 5, 3), (1, 3, 2)),
    ((1, 6, 4), (1, 3, 2)),
    ((1, 2, 3), (1, 2, 3)),
    ((), ()),
    ((10, -3, 7), (3, 1, 2)),
])
def test_reduce_pattern(word, expected):
    assert reduce_pattern(word) == expected


def test_reduce_pattern_rejects_repeats():
    with pytest.raises(InvalidInput):
        reduce_pattern((1, 3, 1))


@pytest.mark.parametrize("p, q", [
    ((1, 2, 3), (1, 2, 3)),
    ((2, 3, 1), (3, 1, 2)),
    ((1, 3, 5, 4, 2), (1, 5, 2, 4, 3)),
])
def test_inverse(p, q):
    assert inverse(p) == q


@pytest.mark.parametrize("p, q", [
    ((1, 2, 3, 4), (4, 3, 2, 1)),
    ((1, 3, 2, 4), (4, 2, 3, 1)),
    ((), ()),
])
def test_complement(p, q):
    assert complement(p) == q


def test_distance_examples():
    assert distance((2, 5, 3, 1, 6, 4), 3, 6) == 2
    assert distance((2, 5, 3, 1, 6, 4), 6, 3) == 2
    assert distance((1, 3, 5, 4, 2), 2, 3) == 3
    assert distance((1, 3, 5, 4, 2), 4, 4) == 0
    with pytest.raises(InvalidInput):
        distance((1, 2), 0, 1)
    with pytest.raises(InvalidInput):
        distance((1, 2), 1, 3)


def test_factor_pattern():
    p = (1, 3, 5, 4, 2)
    assert factor_pattern(p, 2, 4) == (1, 3, 2)
    assert factor_pattern(p, 1, 5) == p
    assert factor_pattern(p, 3, 3) == (1,)
    for i, j in [(0, 2), (3, 2), (2, 6)]:
        with pytest.raises(InvalidInput):
            factor_pattern(p, i, j)


def test_insert_right():
    assert insert_right((1, 2, 3), 4) == (1, 2, 3, 4)
    assert insert_right((3, 2, 1), 1) == (4, 3, 2, 1)
    assert insert_right((1, 3, 2), 2) == (1, 4, 3, 2)
    assert insert_right((), 1) == (1,)


def test_parse_and_format_round_trip():
    assert parse_perm("13542") == ((1, 3, 5, 4, 2), "compact")
    assert parse_perm("1,3,5,4,2") == ((1, 3, 5, 4, 2), "comma")
    p = tuple(range(12, 0, -1))
    assert parse_perm(format_perm(p))[0] == p
    assert format_perm((1, 3, 2), "comma") == "1,3,2"
    for bad in ["1x", "122", "1,2,2", "0"]:
        with pytest.raises(InvalidInput):
            parse_perm(bad)


def test_as_perm_rejects_non_permutations():
    with pytest.raises(InvalidInput):
        as_perm((1, 3))


def test_perms_array_is_all_of_sn():
    from itertools import permutations

    for n in range(0, 7):
        rows = {tuple(r) for r in perms_array(n).tolist()}
        assert rows == set(permutations(range(1, n + 1)))


@given(perms())
def test_involutions(p):
    assert inverse(inverse(p)) == p
    assert complement(complement(p)) == p


@given(perms())
def test_reduce_is_idempotent_on_permutations(p):
    assert reduce_pattern(p) == p


@given(perms(min_size=1))
def test_distance_reads_positions_from_inverse(p):
    q = inverse(p)
    n = len(p)
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            assert distance(p, x, y) == abs(q[x - 1] - q[y - 1]) == distance(p, y, x)


@given(perms(min_size=1))
def test_factor_length(p):
    n = len(p)
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            assert len(factor_pattern(p, i, j)) == j - i + 1
