from collections import defaultdict
from itertools import permutations

import pytest
from hypothesis import strategies as st

from ukperm.perm import reduce_pattern


@st.composite
def perms(draw, min_size=0, max_size=9):
    n = draw(st.integers(min_size, max_size))
    return tuple(draw(st.permutations(range(1, n + 1))))


def windows(p, k):
    """Window path straight from the definition, independent of the library."""
    return tuple(reduce_pattern(p[i : i + k]) for i in range(len(p) - k + 1))


_classes: dict = {}


def path_classes(n, k):
    """Group S_n by k-window path (brute force, cached)."""
    key = (n, k)
    if key not in _classes:
        groups = defaultdict(set)
        for p in permutations(range(1, n + 1)):
            groups[windows(p, k)].add(p)
        _classes[key] = dict(groups)
    return _classes[key]


def ukd_by_definition(n, k):
    """Permutations that are alone in their window-path class."""
    if n <= k:
        return set(permutations(range(1, n + 1)))
    return {next(iter(c)) for c in path_classes(n, k).values() if len(c) == 1}


@pytest.fixture
def classes():
    return path_classes


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
