import itertools
from functools import lru_cache

import pytest
from hypothesis import strategies as st

from degseq import DegreeSequence

ACCEPTANCE_LINES = []


@lru_cache(maxsize=None)
def graphic_by_enumeration(n):
    """Sorted degree tuples of every simple graph on n vertices with no
    isolated vertex, found by trying all edge subsets."""
    pairs = list(itertools.combinations(range(n), 2))
    seen = set()
    for mask in range(1 << len(pairs)):
        deg = [0] * n
        for bit, (u, v) in enumerate(pairs):
            if mask >> bit & 1:
                deg[u] += 1
                deg[v] += 1
        if all(deg):
            seen.add(tuple(sorted(deg, reverse=True)))
    return frozenset(seen)


def sequences(max_value=30, max_len=40):
    return st.lists(st.integers(1, max_value), min_size=1, max_size=max_len).map(
        DegreeSequence.from_values)


def rle_sequences(max_value=10**6, max_runs=8, max_count=10**6):
    """Large sequences built from runs, for properties that only touch runs."""
    return st.lists(
        st.tuples(st.integers(1, max_value), st.integers(1, max_count)),
        min_size=1, max_size=max_runs, unique_by=lambda t: t[0],
    ).map(lambda runs: DegreeSequence(tuple(sorted(runs, reverse=True))))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is not None and rep.when == "call":
        status = "PASS" if rep.passed else "FAIL"
        ACCEPTANCE_LINES.append(f"[{status}] criterion {marker.args[0]}: {marker.args[1]}")


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
